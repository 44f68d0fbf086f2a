"""Writes the two 6-point actions of A6 that differ by the outer automorphism
of S6. The second action is the action on the six synthematic totals."""
import itertools
import sys
from pathlib import Path

POINTS = range(6)
duads = [frozenset(p) for p in itertools.combinations(POINTS, 2)]
synthemes = [frozenset(s) for s in itertools.combinations(duads, 3) if len(frozenset().union(*s)) == 6]
totals = sorted(
    (frozenset(t) for t in itertools.combinations(synthemes, 5) if len(frozenset().union(*t)) == 15),
    key=lambda t: sorted(sorted(sorted(d) for d in s) for s in t),
)
assert len(totals) == 6


def act(perm, total):
    return frozenset(frozenset(frozenset(perm[i] for i in d) for d in s) for s in total)


def cycle(n, *cyc):
    p = list(range(n))
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        p[a] = b
    return p


gens = [cycle(6, 0, 1, 2), cycle(6, 1, 2, 3, 4, 5)]
outer = [[totals.index(act(g, t)) for t in totals] for g in gens]


def write(path, perms, comment):
    with open(path, "w") as f:
        f.write(f"# {comment}\n")
        f.write(f"group degree=6 gens={len(perms)}\n")
        for p in perms:
            f.write(" ".join(map(str, p)) + "\n")


out = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
write(out / "a6_natural.group", gens, "A6 = <(0 1 2), (1 2 3 4 5)> on six points")
write(out / "a6_outer.group", outer,
      "the same generators composed with an outer automorphism of S6 (action on synthematic totals)")
print("outer images:", outer)
