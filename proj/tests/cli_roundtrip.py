"""JSON/CSV consistency for the command line tool.

Every command's JSON report must parse and carry the same numeric content as
its CSV rendering. Usage: cli_roundtrip.py <binary>.
"""

import csv
import io
import json
import subprocess
import sys

BIN = sys.argv[1]

COMMANDS = [
    ["partitions", "--d", "5"],
    ["char", "--d", "6", "--lambda", "2,2,2", "--class", "2,1,1,1,1"],
    ["chartable", "--d", "4"],
    ["group", "--d", "4", "--subgroup", "D4", "--galois", "Sd"],
    ["scrollar", "hooks", "--d", "4", "--g", "2", "--e", "1,2,2", "--i", "2"],
    ["scrollar", "volume", "--d", "6", "--g", "5", "--e", "1,2,2,2,3", "--lambda", "2,2,2"],
    ["scrollar", "dual", "--d", "5", "--g", "4", "--values", "1,2,2,3"],
    ["scrollar", "resolvent", "--d", "5", "--g", "3", "--e", "1,2,2,2", "--subgroup", "AGL1F5"],
    ["scrollar", "bounds", "--d", "5", "--g", "6", "--i", "2", "--lambda", "2,2,1",
     "--subgroup", "AGL1F5"],
    ["ramify", "addendum", "--d", "5", "--subgroup", "AGL1F5"],
    ["ramify", "analyze", "--d", "4", "--g", "1", "--subgroup", "D4", "--branch",
     "2,2;2,2;2,2;2,2", "--galois", "Sd"],
    ["localmodel", "disc", "--e", "4", "--lambda", "2,2"],
    ["localmodel", "trace", "--e", "4", "--monomial", "0,1,2,1"],
    ["localmodel", "specht", "--shape", "2,2", "--S", "0", "--T", "1", "--check"],
]


def run(cmd, fmt):
    out = subprocess.run([BIN] + cmd + ["--format", fmt], capture_output=True, text=True)
    if out.returncode != 0:
        raise SystemExit(f"FAIL: {' '.join(cmd)} --format {fmt} exited {out.returncode}: "
                         f"{out.stderr}")
    return out.stdout


def numbers_in(value, bag):
    """Collect every number-like atom reachable inside a parsed structure."""
    if isinstance(value, bool):
        return
    if isinstance(value, (int, float)):
        bag.append(str(int(value)))
    elif isinstance(value, str):
        stripped = value.lstrip("-")
        if stripped.isdigit():
            bag.append(value)
    elif isinstance(value, list):
        for item in value:
            numbers_in(item, bag)
    elif isinstance(value, dict):
        for item in value.values():
            numbers_in(item, bag)


def main():
    for cmd in COMMANDS:
        payload = json.loads(run(cmd, "json"))
        if not isinstance(payload, dict):
            raise SystemExit(f"FAIL: {' '.join(cmd)}: JSON root is not an object")

        csv_text = run(cmd, "csv")
        rows = list(csv.reader(io.StringIO(csv_text)))
        if len(rows) < 2:
            raise SystemExit(f"FAIL: {' '.join(cmd)}: CSV has no data rows")

        json_numbers = []
        numbers_in(payload, json_numbers)
        csv_atoms = set()
        for row in rows[1:]:
            for cell in row:
                for piece in cell.replace("t^", " ").replace(",", " ").replace("/", " ").split():
                    if piece.lstrip("-").isdigit():
                        csv_atoms.add(piece)
        # every standalone numeric cell of the CSV must appear among the JSON
        # numbers (formats carry identical content; CSV may render fewer rows)
        for row in rows[1:]:
            for cell in row:
                if cell.lstrip("-").isdigit() and cell not in json_numbers:
                    raise SystemExit(
                        f"FAIL: {' '.join(cmd)}: CSV value {cell} missing from JSON")
    print("cli roundtrip: all checks passed")


if __name__ == "__main__":
    main()
