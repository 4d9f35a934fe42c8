"""Writes fixtures/graphs/associahedron.json: flip graph of hexagon triangulations
with one face per diagonal (the triangulations containing it, in cyclic order)."""
import itertools
import json
import pathlib

N = 6
diagonals = [(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1) if not (i == 1 and j == N)]


def crosses(d, e):
    (a, b), (c, f) = d, e
    return len({a, b, c, f}) == 4 and ((a < c < b) != (a < f < b))


triangulations = [frozenset(t) for t in itertools.combinations(diagonals, N - 3)
                  if not any(crosses(d, e) for d, e in itertools.combinations(t, 2))]
triangulations.sort(key=lambda t: sorted(t))
index = {t: i for i, t in enumerate(triangulations)}
edges = sorted(
    (i, j) for i, j in itertools.combinations(range(len(triangulations)), 2)
    if len(triangulations[i] & triangulations[j]) == N - 4
)
adj = {v: [] for v in range(len(triangulations))}
for a, b in edges:
    adj[a].append(b)
    adj[b].append(a)

faces, labels = [], []
for d in diagonals:
    members = {i for i, t in enumerate(triangulations) if d in t}
    start = min(members)
    cycle, prev = [start], None
    while True:
        nxt = [w for w in adj[cycle[-1]] if w in members and w != prev and (len(cycle) < 2 or w != cycle[-2])]
        nxt = [w for w in nxt if w not in cycle[1:]]
        if not nxt:
            break
        prev = cycle[-1]
        if nxt[0] == start:
            break
        cycle.append(nxt[0])
    assert len(cycle) == len(members), (d, cycle, members)
    faces.append(cycle)
    labels.append("p%d%d" % d)

out = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "graphs" / "associahedron.json"
out.write_text(json.dumps({
    "vertices": len(triangulations),
    "edges": [list(e) for e in edges],
    "faces": faces,
    "face_labels": labels,
}) + "\n")
print(len(triangulations), "vertices,", len(edges), "edges,", len(faces), "faces")
