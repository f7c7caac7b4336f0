"""Independent oracle for the toy correlate fixture.

Recomputes word counts, lexicon hits, alignment and both coefficients with
a plain regex tokenizer, scipy's Pearson and the dcor-style double-centred
distance matrices in numpy. Writes toy_oracle.json next to this file.
"""
import json
import pathlib
import re

import numpy as np
from scipy.stats import pearsonr

HERE = pathlib.Path(__file__).parent
lexicon = {
    line.strip()
    for line in (HERE / "lexicon.txt").read_text().splitlines()
    if line.strip() and not line.startswith("#")
}
market = dict(
    line.split(",") for line in (HERE / "market.csv").read_text().split()[1:]
)

rows = []
for path in sorted((HERE / "toy_corpus").glob("*.txt")):
    words = re.findall(r"[a-z]+(?:['-][a-z]+)*", path.read_text().lower())
    hits = sum(w in lexicon for w in words)
    date = path.stem
    rows.append((date, len(words), hits, 100 * hits / len(words), float(market[date])))

x = np.array([r[3] for r in rows])
y = np.array([r[4] for r in rows])


def centred(v):
    a = np.abs(v[:, None] - v[None, :])
    return a - a.mean(0) - a.mean(1)[:, None] + a.mean()


def dcor(x, y):
    A, B = centred(x), centred(y)
    return float(np.sqrt((A * B).mean() / np.sqrt((A * A).mean() * (B * B).mean())))


out = {
    "documents": [
        {"date": d, "words": n, "hits": h, "rate": r} for d, n, h, r, _ in rows
    ],
    "n": len(rows),
    "pearson": pearsonr(x, y).statistic,
    "dcor": dcor(x, y),
    "diff_pearson": pearsonr(np.diff(x), np.diff(y)).statistic,
    "diff_dcor": dcor(np.diff(x), np.diff(y)),
}
(HERE / "toy_oracle.json").write_text(json.dumps(out, indent=2) + "\n")
print(json.dumps(out, indent=2))
