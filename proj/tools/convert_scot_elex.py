#!/usr/bin/env python3
"""Convert ward files from the public Scottish local-election corpus into the
canonical BLT layout read by `rcv`.

Best effort. The corpus ships BLT-style files whose candidate lines carry the
party either as a second quoted field or as a trailing parenthesised group
inside the name. Both are recognised; anything else gets party "IND".

Accepted input:
  header        "<m> <k>"
  withdrawn     optional line of negative candidate numbers (dropped)
  ballots       "[(id)] <count> <c1> <c2> ... 0", ended by a line "0"
  candidates    m lines, "Name" ["Party"] or "Name (Party)"
  title         optional final quoted line

Output is byte-identical to `serialize_blt` on the same election: identical
rankings merged, ballot types sorted by ranking, candidates renumbered
densely when withdrawn ones are dropped.

Usage:
  convert_scot_elex.py INPUT.blt [-o OUTPUT.blt]
  convert_scot_elex.py INPUT_DIR -o OUTPUT_DIR
"""

import argparse
import re
import shlex
import sys
from collections import Counter
from pathlib import Path

PAREN_PARTY = re.compile(r"^(.*?)\s*\(([^()]*(?:\([^()]*\))?[^()]*)\)\s*$")


class ConvertError(Exception):
    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")


def tokens(line):
    return line.replace(",", " ").split()


def parse_candidate(line):
    fields = shlex.split(line.replace('","', '" "'))
    if not fields:
        return None
    name = fields[0].strip()
    party = fields[1].strip() if len(fields) > 1 else ""
    if not party:
        m = PAREN_PARTY.match(name)
        if m:
            name, party = m.group(1).strip(), m.group(2).strip()
    return name, party or "IND"


def convert(path):
    lines = [
        (n, raw.strip())
        for n, raw in enumerate(Path(path).read_text(encoding="utf-8-sig").splitlines(), 1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise ConvertError(path, 1, "empty file")
    it = iter(lines)

    n, header = next(it)
    try:
        m, k = (int(t) for t in header.split())
    except ValueError:
        raise ConvertError(path, n, f"expected '<candidates> <seats>', got {header!r}") from None

    withdrawn = set()
    ballots = Counter()
    for n, line in it:
        fields = tokens(line)
        if fields and fields[0].startswith("(") and fields[0].endswith(")"):
            fields = fields[1:]
        if not withdrawn and not ballots and fields and all(f.startswith("-") for f in fields):
            withdrawn = {-int(f) for f in fields}
            continue
        if fields == ["0"]:
            break
        if any("=" in f for f in fields):
            raise ConvertError(path, n, "tied rankings are not supported")
        try:
            count, *ranking = (int(f) for f in fields)
        except ValueError:
            raise ConvertError(path, n, f"malformed ballot line {line!r}") from None
        if not ranking or ranking[-1] != 0:
            raise ConvertError(path, n, "ballot line must end with 0")
        ranking = ranking[:-1]
        if any(not 1 <= c <= m for c in ranking):
            raise ConvertError(path, n, "candidate number out of range")
        if len(set(ranking)) != len(ranking):
            raise ConvertError(path, n, "candidate ranked twice")
        ranking = tuple(c for c in ranking if c not in withdrawn)
        if count > 0 and ranking:
            ballots[ranking] += count
    else:
        raise ConvertError(path, n, "missing ballot terminator 0")

    candidates = []
    for _ in range(m):
        try:
            n, line = next(it)
        except StopIteration:
            raise ConvertError(path, n, f"expected {m} candidate lines") from None
        candidates.append(parse_candidate(line))
    title_line = next(it, None)
    title = shlex.split(title_line[1])[0] if title_line else Path(path).stem

    kept = [c for c in range(1, m + 1) if c not in withdrawn]
    renumber = {old: new for new, old in enumerate(kept, 1)}
    out = [f"{len(kept)} {k}"]
    merged = Counter()
    for ranking, count in ballots.items():
        merged[tuple(renumber[c] for c in ranking)] += count
    for ranking in sorted(merged):
        out.append(" ".join([str(merged[ranking]), *map(str, ranking), "0"]))
    out.append("0")
    out.extend(f'"{candidates[c - 1][0]}","{candidates[c - 1][1]}"' for c in kept)
    out.append(f'"{title}"')
    return "\n".join(out) + "\n"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", type=Path, help="ward file or directory of ward files")
    parser.add_argument("-o", "--output", type=Path, help="output file or directory (default: stdout)")
    args = parser.parse_args(argv)

    if args.input.is_dir():
        if args.output is None:
            parser.error("a directory input needs --output DIR")
        args.output.mkdir(parents=True, exist_ok=True)
        failures = 0
        for src in sorted(args.input.glob("*.blt")):
            try:
                (args.output / src.name).write_text(convert(src), encoding="utf-8")
            except (ConvertError, OSError) as e:
                print(e, file=sys.stderr)
                failures += 1
        return 1 if failures else 0

    try:
        text = convert(args.input)
    except ConvertError as e:
        print(e, file=sys.stderr)
        return 2
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
