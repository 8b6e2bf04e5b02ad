#include "scrollar/perm.hpp"

#include <algorithm>
#include <sstream>

namespace scrollar {

Perm::Perm(int d) : img_(static_cast<size_t>(d)) {
    for (int i = 0; i < d; ++i) img_[static_cast<size_t>(i)] = i;
}

Perm::Perm(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
            throw ValidationError("permutation images must be a bijection on {1,...,d}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& one_based_cycles) {
    std::vector<int> img(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) img[static_cast<size_t>(i)] = i;
    for (const auto& cycle : one_based_cycles) {
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i] - 1;
            int to = cycle[(i + 1) % cycle.size()] - 1;
            if (from < 0 || from >= d || to < 0 || to >= d)
                throw ValidationError("cycle entry out of range");
            img[static_cast<size_t>(from)] = to;
        }
    }
    return Perm(std::move(img));
}

Perm Perm::parse(int d, const std::string& text) {
    if (text == "e" || text == "id" || text == "()") return Perm(d);
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < text.size()) {
        if (isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ValidationError("expected '(' in cycle notation: " + text);
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw ValidationError("unbalanced cycle notation: " + text);
        std::string body = text.substr(i + 1, close - i - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream ss(body);
        std::vector<int> cycle;
        std::string token;
        while (ss >> token) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw ValidationError("bad cycle entry '" + token + "' in " + text);
            }
            if (used != token.size())
                throw ValidationError("bad cycle entry '" + token + "' in " + text);
            cycle.push_back(v);
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        i = close + 1;
    }
    return from_cycles(d, cycles);
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw ValidationError("permutation degree mismatch");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[i] = img_[static_cast<size_t>(o.img_[i])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Partition Perm::cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = static_cast<size_t>(img_[j]);
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::string Perm::to_cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<size_t>(img_[j]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm representative_of_type(const Partition& e) {
    std::vector<int> img(static_cast<size_t>(e.sum()));
    int start = 0;
    for (int len : e.parts()) {
        for (int k = 0; k < len; ++k) img[static_cast<size_t>(start + k)] = start + (k + 1) % len;
        start += len;
    }
    return Perm(std::move(img));
}

std::vector<Perm> adjacent_transpositions(int d) {
    std::vector<Perm> out;
    for (int i = 0; i + 1 < d; ++i) {
        std::vector<int> img(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) img[static_cast<size_t>(j)] = j;
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(i + 1)]);
        out.push_back(Perm(std::move(img)));
    }
    return out;
}

std::vector<int> adjacent_word(const Perm& p) {
    // bubble-sort the image vector back to the identity; the swaps performed,
    // reversed, express p as a product of adjacent transpositions
    std::vector<int> img = p.images();
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < img.size(); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                word.push_back(static_cast<int>(i));
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

std::vector<long> small_factorials(int n) {
    std::vector<long> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
    return fact;
}

}  // namespace

long lehmer_rank(const Perm& p) {
    const auto& img = p.images();
    int n = p.degree();
    auto fact = small_factorials(n);
    long rank = 0;
    for (int i = 0; i < n; ++i) {
        long smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (img[static_cast<size_t>(j)] < img[static_cast<size_t>(i)]) ++smaller_later;
        rank += smaller_later * fact[static_cast<size_t>(n - 1 - i)];
    }
    return rank;
}

Perm perm_from_lehmer_rank(int d, long rank) {
    auto fact = small_factorials(d);
    std::vector<int> pool(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) pool[static_cast<size_t>(i)] = i;
    std::vector<int> img;
    for (int i = d - 1; i >= 0; --i) {
        long f = fact[static_cast<size_t>(i)];
        long idx = rank / f;
        rank %= f;
        img.push_back(pool[static_cast<size_t>(idx)]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return Perm(std::move(img));
}

}  // namespace scrollar
