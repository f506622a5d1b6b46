#!/usr/bin/env python3
"""Regenerate the bundled example networks.

Writes four edge lists into the directory containing this script:

    karate.edges      34 nodes    78 links   max shell 4
    dolphin.edges     62 nodes   159 links   max shell 4
    thrones.edges    107 nodes   352 links   max shell 7
    facebook.edges  1266 nodes  6451 links   max shell 11

karate is the canonical Zachary karate-club graph (via networkx, labelled
1..34 as in the classic distribution).  dolphin and thrones are frozen
synthetic stand-ins that reproduce the size/shell profile of the well-known
datasets of the same names; the instances were drawn from a banded-degree
Havel-Hakimi + double-edge-swap family and are embedded verbatim so the
files regenerate byte-identically regardless of library versions.  facebook
is a deterministic layered construction (11-regular circulant core, strictly
upward shell attachments, pendant leaves) built with only the stdlib.

Run:  python3 make_standins.py
"""

import hashlib
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent


def write_edges(name, pairs, label=str):
    path = HERE / name
    with path.open("w") as out:
        for a, b in pairs:
            out.write(f"{label(a)} {label(b)}\n")
    return path


def karate_edges():
    import networkx as nx

    g = nx.karate_club_graph()
    return sorted((min(a, b) + 1, max(a, b) + 1) for a, b in g.edges())


# Frozen instance: three-band degree sequence (12 leaves, 9 low-degree
# scaffold nodes, 41-node near-critical 4-core), leaves anchored on the
# scaffold so the lowest-weight link pool stays off-core.
DOLPHIN_EDGES = [
    (0,3), (0,6), (0,37), (0,51), (0,60), (1,24), (1,29), (1,45), (1,60),
    (2,4), (2,26), (2,54), (2,57), (5,9), (5,10), (5,22), (5,53), (6,8),
    (6,28), (6,45), (6,49), (6,50), (6,59), (6,60), (7,13), (8,11), (8,17),
    (8,20), (8,38), (8,40), (8,53), (9,14), (9,17), (9,27), (9,30), (9,39),
    (9,60), (10,11), (10,29), (10,38), (10,53), (10,57), (11,12), (11,30), (11,35),
    (11,41), (11,45), (12,16), (12,20), (12,30), (12,47), (12,53), (12,57), (13,28),
    (13,50), (13,58), (13,59), (14,21), (14,26), (14,29), (14,46), (14,49), (14,57),
    (15,16), (16,48), (17,20), (17,24), (17,29), (17,53), (17,57), (18,19), (18,40),
    (18,44), (18,47), (18,50), (18,52), (19,21), (19,37), (19,44), (19,50), (19,56),
    (19,59), (20,24), (20,31), (20,35), (20,41), (20,43), (21,44), (21,46), (21,53),
    (21,61), (22,26), (22,30), (22,35), (22,39), (22,44), (22,47), (23,25), (23,35),
    (23,39), (24,26), (24,44), (26,35), (26,59), (27,28), (27,29), (27,41), (27,45),
    (27,59), (27,61), (28,39), (28,44), (28,45), (28,49), (28,59), (30,37), (30,43),
    (30,44), (30,52), (31,32), (31,48), (33,40), (34,37), (34,39), (34,41), (34,43),
    (34,45), (34,48), (34,53), (35,41), (35,48), (36,55), (37,45), (37,61), (38,40),
    (38,41), (38,50), (38,52), (38,53), (38,61), (39,46), (41,47), (42,56), (43,46),
    (43,49), (43,50), (43,55), (43,56), (46,48), (46,57), (46,60), (46,61), (47,48),
    (47,61), (48,52), (50,55), (50,60), (52,55), (52,57),
]

# Frozen instance: six-band heavy-tail degree sequence; the 18-node 7-core
# carries the heavy tail while degree-2 fringe cycles supply the low end.
THRONES_EDGES = [
    (0,27), (0,48), (0,84), (0,98), (1,9), (1,20), (1,39), (1,69), (1,75),
    (1,79), (1,100), (1,105), (1,106), (2,17), (2,52), (2,83), (2,84), (2,88),
    (2,105), (3,56), (3,82), (3,83), (3,105), (4,30), (4,34), (4,51), (4,57),
    (4,101), (4,102), (5,28), (5,30), (5,31), (5,33), (5,39), (5,40), (5,42),
    (5,44), (5,48), (5,51), (5,56), (5,62), (5,63), (5,79), (5,98), (5,102),
    (6,28), (6,35), (6,42), (6,78), (6,90), (6,98), (7,50), (7,51), (7,69),
    (7,95), (8,45), (8,59), (8,97), (8,102), (9,34), (9,45), (9,105), (10,66),
    (10,75), (10,79), (10,101), (11,44), (11,84), (12,31), (12,48), (12,76), (12,85),
    (13,28), (13,97), (14,90), (14,104), (15,28), (15,75), (16,44), (16,47), (16,51),
    (16,68), (16,69), (16,74), (16,79), (16,84), (16,98), (16,106), (17,48), (17,83),
    (17,97), (18,30), (18,35), (18,37), (18,42), (18,47), (18,55), (18,84), (18,102),
    (18,106), (19,58), (19,86), (19,100), (19,105), (20,44), (20,51), (20,92), (21,49),
    (21,53), (22,37), (22,63), (23,65), (23,66), (23,84), (23,105), (24,35), (24,75),
    (24,83), (24,84), (24,97), (24,101), (25,69), (25,102), (26,55), (26,97), (26,98),
    (26,102), (27,31), (27,36), (27,41), (27,58), (27,82), (28,38), (28,42), (28,44),
    (28,45), (28,48), (28,54), (28,65), (28,75), (28,79), (28,80), (28,82), (28,83),
    (28,84), (28,90), (28,98), (28,99), (28,101), (28,105), (29,41), (29,97), (30,37),
    (30,41), (30,43), (30,48), (30,50), (30,51), (30,76), (30,83), (30,84), (30,90),
    (30,93), (30,105), (31,42), (31,49), (31,51), (31,65), (31,72), (31,73), (31,75),
    (31,95), (31,98), (31,101), (31,105), (32,42), (32,50), (32,74), (32,90), (32,100),
    (32,101), (33,106), (35,41), (35,48), (35,54), (35,55), (35,65), (35,105), (36,48),
    (36,51), (36,53), (36,60), (36,75), (36,84), (36,89), (36,102), (36,103), (37,70),
    (37,79), (37,101), (38,42), (38,48), (38,97), (40,60), (41,84), (41,90), (41,96),
    (41,100), (41,101), (42,45), (42,54), (43,60), (43,67), (43,90), (44,54), (44,60),
    (44,83), (44,102), (45,48), (45,53), (45,76), (45,90), (45,95), (46,48), (46,55),
    (46,88), (46,98), (47,101), (47,105), (48,52), (48,61), (48,75), (48,77), (48,83),
    (48,90), (48,97), (48,98), (48,101), (48,102), (48,105), (49,84), (49,87), (49,97),
    (49,102), (50,60), (50,79), (50,98), (51,60), (51,61), (51,75), (51,79), (51,90),
    (51,92), (51,97), (51,102), (51,105), (52,53), (52,82), (52,90), (52,98), (54,92),
    (54,97), (55,81), (55,84), (55,99), (55,101), (55,106), (57,63), (57,79), (57,90),
    (57,94), (57,98), (58,97), (58,102), (59,74), (60,71), (60,79), (60,90), (62,95),
    (63,75), (63,83), (63,100), (64,101), (64,102), (65,75), (65,83), (65,84), (65,90),
    (65,97), (67,105), (68,102), (69,74), (69,105), (70,87), (71,92), (72,101), (73,101),
    (75,79), (75,83), (75,87), (75,98), (75,101), (76,99), (77,102), (78,79), (79,93),
    (79,95), (79,97), (79,98), (79,105), (80,101), (81,97), (83,87), (83,88), (83,90),
    (83,98), (83,102), (83,104), (84,90), (84,97), (84,99), (84,100), (84,101), (84,102),
    (85,105), (86,104), (88,102), (89,100), (90,95), (90,97), (90,100), (90,103), (90,104),
    (90,106), (91,101), (91,106), (93,101), (93,105), (94,99), (95,96), (95,98), (95,102),
    (97,98), (97,101), (97,102), (97,105), (97,106), (98,99), (100,101), (101,105), (102,105),
    (102,106),
]


def facebook_edges():
    """Layered build: 228-node 11-regular circulant core (shell 11), middle
    shells k=10..2 attaching k links each into strictly higher shells, and
    241 pendant leaves on the core (shell 1).  Sizes solve the exact node,
    link, and shell-fraction targets: 228 + sum(n_k) + 241 = 1266 and
    1254 + sum(k*n_k) + 241 = 6451."""
    core_n = 228
    middle = {k: n for k, n in zip(range(2, 11), (66, 89, 89, 89, 89, 88, 88, 88, 111))}
    leaves = 241

    edges = []
    for v in range(core_n):                       # circulant offsets 1..5 and n/2
        for off in (1, 2, 3, 4, 5):
            edges.append((v, (v + off) % core_n))
        if v < core_n // 2:
            edges.append((v, v + core_n // 2))

    rng = random.Random(42)
    placed = list(range(core_n))                  # nodes with shell > k so far
    nxt = core_n
    for k in range(10, 1, -1):
        fresh = []
        for _ in range(middle[k]):
            for anchor in rng.sample(placed, k):
                edges.append((anchor, nxt))
            fresh.append(nxt)
            nxt += 1
        placed.extend(fresh)

    for i in range(leaves):                       # leaves round-robin on the core
        edges.append((i % core_n, nxt))
        nxt += 1

    assert nxt == 1266 and len(edges) == 6451
    return sorted((min(a, b), max(a, b)) for a, b in edges)


def main():
    outputs = [
        write_edges("karate.edges", karate_edges()),
        write_edges("dolphin.edges", sorted(DOLPHIN_EDGES)),
        write_edges("thrones.edges", sorted(THRONES_EDGES)),
        write_edges("facebook.edges", facebook_edges()),
    ]
    for path in outputs:
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        print(f"{digest}  {path.name}")


if __name__ == "__main__":
    main()
