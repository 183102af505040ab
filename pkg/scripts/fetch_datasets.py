#!/usr/bin/env python3
"""Fetch the two real-world test networks and convert them to edge lists.

The test suite looks for:

    data/celegans.edges    C. elegans neural network   (expected N=453,  E=2040)
    data/powergrid.edges   western US power grid       (expected N=4941, E=6594)

Sources ship these graphs in different formats (GML, pajek, csv) and some
versions are directed or weighted. This script symmetrizes, strips weights,
drops self-loops, and merges duplicate/reciprocal edges, then reports the
resulting node/edge counts and the sha256 of the normalized file, so a
particular source version can be pinned once fetched.

Usage:
    python3 scripts/fetch_datasets.py --name powergrid --url <zip-or-gml-url>
    python3 scripts/fetch_datasets.py --name celegans --file local_copy.gml

The power grid is distributed in Mark Newman's network data collection
(power.zip, GML). A 453-neuron C. elegans connectome matching the expected
counts circulates in the dynamic-connectome / biological-networks dataset
collections; any edge-list or GML copy works as input here.
"""

import argparse
import hashlib
import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
EXPECTED = {"celegans": (453, 2040), "powergrid": (4941, 6594)}


def read_source(args) -> str:
    if args.file:
        blob = Path(args.file).read_bytes()
    else:
        print(f"downloading {args.url} ...")
        with urllib.request.urlopen(args.url) as resp:
            blob = resp.read()
    if blob[:2] == b"PK":
        with zipfile.ZipFile(io.BytesIO(blob)) as zf:
            names = [n for n in zf.namelist() if not n.endswith("/")]
            name = max(names, key=lambda n: zf.getinfo(n).file_size)
            print(f"using {name} from archive")
            blob = zf.read(name)
    return blob.decode("utf-8", errors="replace")


def extract_edges(text: str) -> list[tuple[str, str]]:
    """Endpoint pairs from GML (source/target blocks) or whitespace columns."""
    if re.search(r"\bedge\s*\[", text):
        pairs = re.findall(
            r"edge\s*\[[^]]*?source\s+(\S+)[^]]*?target\s+(\S+)", text, re.S
        )
        if pairs:
            return pairs
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(("#", "%", "*")):
            continue
        parts = line.split()
        if len(parts) >= 2:
            pairs.append((parts[0], parts[1]))
    return pairs


def normalize(pairs):
    """Symmetrize, drop self-loops, merge duplicates; keep first-seen order."""
    seen = set()
    edges = []
    for u, v in pairs:
        if u == v:
            continue
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return edges


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--name", required=True, choices=sorted(EXPECTED))
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--url")
    src.add_argument("--file")
    args = parser.parse_args()

    edges = normalize(extract_edges(read_source(args)))
    nodes = {x for e in edges for x in e}
    out = DATA_DIR / f"{args.name}.edges"
    DATA_DIR.mkdir(exist_ok=True)
    body = "".join(f"{u} {v}\n" for u, v in edges)
    out.write_text(body)

    n_exp, e_exp = EXPECTED[args.name]
    digest = hashlib.sha256(body.encode()).hexdigest()
    print(f"wrote {out}: N={len(nodes)} E={len(edges)}")
    print(f"sha256: {digest}")
    if (len(nodes), len(edges)) != (n_exp, e_exp):
        print(f"warning: expected N={n_exp} E={e_exp}; this source version "
              "differs, reproduction tolerances may not hold", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
