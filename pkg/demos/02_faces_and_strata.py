"""Face lattices and rank stratifications of the corpus charts.

The quadrant chart N^2 has the four faces of the positive quadrant.  The
quadric-cone chart <(1,0), (1,1), (1,2)> also has four: its middle
generator spans an interior ray, which is not a face, and the quotient by
each face is again a valid chart (the stalk along that stratum).
"""

from logcharts import MonoidSpec, faces, stalk, stratify, validate

charts = {
    "quadrant N^2": validate(MonoidSpec.make(2, [[1, 0], [0, 1]])),
    "quadric cone": validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]],
                                             [[[1, 0, 1], [0, 2, 0]]])),
}

for name, m in charts.items():
    print(f"== {name} ==")
    print("generators:", m.generators)
    print("verified relations:", m.relations or "(none)")
    for f in faces(m):
        quotient, r = stalk(m, f)
        print(f"  face {str(f):12s} stalk rank {r}   "
              f"stalk generators {quotient.generators}")
    table = stratify(m)
    print("rank multiset:", table.ranks())
    print("closed locus of rank >= 1:",
          [list(e.face.support) for e in table.rank_at_least(1)])
    print("unique maximal stratum:",
          [list(e.face.support) for e in table.rank_at_least(table.max_rank)])
    print()

print("the middle ray of the cone is not a face: no functional can vanish")
print("on (1,1) while staying positive on (1,0) and (1,2).")
