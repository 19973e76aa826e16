"""Writes data/catalog/named_groups.grp: the small groups used as worked
examples, as explicit permutation records.

Usage (from the repository root): python3 tools/gen_named_groups.py
"""

from itertools import product


def translations_and_inversion(moduli):
    """Generators of Dih A for A = Z/m1 x ... x Z/mk acting on itself:
    one translation per factor plus the inversion a -> -a."""
    points = list(product(*[range(m) for m in moduli]))
    index = {p: i for i, p in enumerate(points)}
    gens = []
    for k, m in enumerate(moduli):
        shift = [0] * len(moduli)
        shift[k] = 1
        gens.append([index[tuple((a + s) % n for a, s, n in zip(p, shift, moduli))] for p in points])
    gens.append([index[tuple((-a) % n for a, n in zip(p, moduli))] for p in points])
    return len(points), gens


def cycle(n):
    return [(i + 1) % n for i in range(n)]


RECORDS = [
    ("c4", 4, [cycle(4)], 4, ["cyclic"]),
    ("c5", 5, [cycle(5)], 5, ["cyclic", "five-values"]),
    ("c2_x_c4", 6, [[1, 0, 2, 3, 4, 5], [0, 1, 3, 4, 5, 2]], 8, ["abelian"]),
    ("s3", 3, [[1, 0, 2], [1, 2, 0]], 6, ["symmetric", "four-values"]),
    ("d8", 4, [cycle(4), [0, 3, 2, 1]], 8, ["dihedral", "five-values"]),
    ("q8", 8, [[4, 5, 7, 6, 1, 0, 2, 3], [2, 3, 1, 0, 6, 7, 5, 4]], 8, ["quaternion", "five-values"]),
    ("c2_x_dih_c3", 5, [[1, 0, 2, 3, 4], [1, 2, 0, 3, 4], [0, 1, 2, 4, 3]], 12, ["five-values"]),
    ("s4", 4, [[1, 0, 2, 3], cycle(4)], 24, ["symmetric", "five-values"]),
    ("a5", 5, [[1, 2, 0, 3, 4], cycle(5)], 60, ["alternating", "nonsolvable"]),
    ("s5", 5, [[1, 0, 2, 3, 4], cycle(5)], 120, ["symmetric", "nonsolvable"]),
]

for name, moduli, order in [
    ("dih_c3", [3], 6),
    ("dih_c3_2", [3, 3], 18),
    ("dih_c3_3", [3, 3, 3], 54),
    ("dih_c3_4", [3, 3, 3, 3], 162),
    ("dih_c9", [9], 18),
]:
    degree, gens = translations_and_inversion(moduli)
    tags = ["gendihedral"] + (["four-values"] if set(moduli) == {3} else [])
    RECORDS.append((name, degree, gens, order, tags))

with open("data/catalog/named_groups.grp", "w") as f:
    f.write("# Groups used as worked examples, as permutation records.\n")
    f.write("# Generalized dihedral groups act on A by translations and inversion.\n")
    for name, degree, gens, order, tags in RECORDS:
        f.write(f"\ngroup {name}\ndegree {degree}\n")
        for g in gens:
            f.write("gen " + ",".join(map(str, g)) + "\n")
        f.write(f"order {order}\n")
        for t in tags:
            f.write(f"tag {t}\n")
