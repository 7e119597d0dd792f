"""Regenerates data/catalog/*.rot from vertex coordinates.

Polyhedra: neighbours are sorted counterclockwise around the outward normal.
Plane drawings: neighbours are sorted counterclockwise by angle.
"""
import itertools
import math
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "data" / "catalog"


def write(name, rotation, outer):
    n = len(rotation)
    lines = [f"rot n={n} outer=" + ",".join(str(v + 1) for v in outer)]
    for v in range(n):
        lines.append(f"{v + 1}: " + " ".join(str(u + 1) for u in rotation[v]))
    (OUT / f"{name}.rot").write_text("\n".join(lines) + "\n")


def polyhedron(points, edge_len):
    pts = np.array(points, dtype=float)
    n = len(pts)
    adj = [[u for u in range(n) if u != v and abs(np.linalg.norm(pts[u] - pts[v]) - edge_len) < 1e-9]
           for v in range(n)]
    rotation = []
    for v in range(n):
        normal = pts[v] / np.linalg.norm(pts[v])
        e1 = pts[adj[v][0]] - pts[v]
        e1 -= normal * e1.dot(normal)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        ang = {u: math.atan2((pts[u] - pts[v]).dot(e2), (pts[u] - pts[v]).dot(e1)) % (2 * math.pi)
               for u in adj[v]}
        rotation.append(sorted(adj[v], key=ang.get))
    # Outer face: the face through vertices 0, 1 (smallest third vertex).
    third = min(u for u in adj[0] if u in adj[1])
    return rotation, [0, 1, third]


def plane(points, edges, outer):
    n = len(points)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rotation = []
    for v in range(n):
        x, y = points[v]
        rotation.append(sorted(adj[v], key=lambda u: math.atan2(points[u][1] - y, points[u][0] - x)))
    return rotation, outer


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    octa = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    write("octahedron", *polyhedron(octa, math.sqrt(2)))

    phi = (1 + math.sqrt(5)) / 2
    ico = []
    for a, b in itertools.product((1, -1), repeat=2):
        ico += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    write("icosahedron", *polyhedron(ico, 2.0))

    write("triangle", *plane([(0, 0), (2, 0), (1, 2)], [(0, 1), (1, 2), (0, 2)], [0, 1, 2]))
    k4_pts = [(0, 0), (4, 0), (2, 4), (2, 1)]
    k4_edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)]
    write("k4", *plane(k4_pts, k4_edges, [0, 1, 2]))
    # A vertex stacked into an inner face of K4: {1,2,4} separates 5 from 3.
    write("stacked_k4", *plane(k4_pts + [(2, 0.4)], k4_edges + [(0, 4), (1, 4), (3, 4)], [0, 1, 2]))
    # K4 minus the edge 1-3, outer face is the quadrilateral 1,2,3,4.
    write("k4_minus_edge", *plane([(0, 0), (4, 0), (4, 4), (0, 4)],
                                  [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)], [0, 1, 2, 3]))


if __name__ == "__main__":
    main()
