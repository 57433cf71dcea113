"""Base blocks of the recursive small-digirth families.

Each entry gives the nested-square layout of G_1 (number of middle squares,
rung positions per gap, then subdivision and degree-2 edits) and a coating
function on G_1 as ``(vertex, edge, side, value)`` rows.  The coating
functions were found by ``search_coating_function`` with the corners of
G_2 tied to the corners of G_1 they copy, and are checked again by
``verify_recursive_digirth`` in the test suite.
"""

from __future__ import annotations

SMALL_DIGIRTH_DESIGNS: dict = {
    6: {
        "middle": 1,
        "rungs": [[0, 2], [1, 3]],
        "ops": [
        ],
        "h": [
            ('L1p0', 'q1.0', 1, 1),
            ('L1p0', 'q1.3', -1, 1),
            ('L1p0', 'r0.0', -1, 1),
            ('L1p1', 'q1.0', -1, 1),
            ('L1p1', 'q1.1', 1, 1),
            ('L1p1', 'r1.1', 1, 1),
            ('L1p2', 'q1.1', -1, 1),
            ('L1p2', 'q1.2', 1, 1),
            ('L1p2', 'r0.2', -1, 1),
            ('L1p3', 'q1.2', -1, 1),
            ('L1p3', 'q1.3', 1, 1),
            ('L1p3', 'r1.3', 1, 1),
            ('u0', 'q0.0', 1, 1),
            ('u0', 'q0.3', -1, 1),
            ('u0', 'r0.0', 1, 1),
            ('u1', 'q2.0', 1, 3),
            ('u1', 'q2.3', -1, 1),
            ('v0', 'q0.0', -1, 3),
            ('v0', 'q0.1', 1, 1),
            ('v1', 'q2.0', -1, 1),
            ('v1', 'q2.1', 1, 1),
            ('v1', 'r1.1', -1, 1),
            ('w0', 'q0.1', -1, 1),
            ('w0', 'q0.2', 1, 1),
            ('w0', 'r0.2', 1, 1),
            ('w1', 'q2.1', -1, 1),
            ('w1', 'q2.2', 1, 3),
            ('x0', 'q0.2', -1, 3),
            ('x0', 'q0.3', 1, 1),
            ('x1', 'q2.2', -1, 1),
            ('x1', 'q2.3', 1, 1),
            ('x1', 'r1.3', -1, 1),
        ],
    },
    8: {
        "middle": 1,
        "rungs": [[0, 1], [0, 1, 2, 3]],
        "ops": [
            ('sub', 'q1.0', 'sd2', 'q1.0~2'),
            ('sub', 'r1.0', 'sd1', 'r1.0~1'),
        ],
        "h": [
            ('L1p0', 'q1.0', 1, 1),
            ('L1p0', 'q1.3', -1, 1),
            ('L1p0', 'r0.0', -1, 1),
            ('L1p0', 'r1.0', 1, 1),
            ('L1p1', 'q1.0~2', -1, 1),
            ('L1p1', 'q1.1', 1, 1),
            ('L1p1', 'r0.1', -1, 1),
            ('L1p1', 'r1.1', 1, 1),
            ('L1p2', 'q1.1', -1, 1),
            ('L1p2', 'q1.2', 1, 1),
            ('L1p2', 'r1.2', 1, 3),
            ('L1p3', 'q1.2', -1, 1),
            ('L1p3', 'q1.3', 1, 1),
            ('L1p3', 'r1.3', 1, 3),
            ('sd1', 'r1.0', -1, 2),
            ('sd1', 'r1.0~1', 1, 4),
            ('sd2', 'q1.0', -1, 4),
            ('sd2', 'q1.0~2', 1, 2),
            ('u0', 'q0.0', 1, 1),
            ('u0', 'q0.3', -1, 3),
            ('u0', 'r0.0', 1, 1),
            ('u1', 'q2.0', 1, 3),
            ('u1', 'q2.3', -1, 1),
            ('u1', 'r1.0~1', -1, 1),
            ('v0', 'q0.0', -1, 3),
            ('v0', 'q0.1', 1, 1),
            ('v0', 'r0.1', 1, 1),
            ('v1', 'q2.0', -1, 1),
            ('v1', 'q2.1', 1, 3),
            ('v1', 'r1.1', -1, 1),
            ('w0', 'q0.1', -1, 5),
            ('w0', 'q0.2', 1, 1),
            ('w1', 'q2.1', -1, 3),
            ('w1', 'q2.2', 1, 1),
            ('w1', 'r1.2', -1, 1),
            ('x0', 'q0.2', -1, 5),
            ('x0', 'q0.3', 1, 1),
            ('x1', 'q2.2', -1, 3),
            ('x1', 'q2.3', 1, 1),
            ('x1', 'r1.3', -1, 1),
        ],
    },
    9: {
        "middle": 1,
        "rungs": [[0, 1, 2], [0, 1, 2, 3]],
        "ops": [
            ('sub', 'q1.1', 'sd3', 'q1.1~3'),
            ('sub', 'r1.3', 'sd2', 'r1.3~2'),
            ('sub', 'q1.0', 'sd1', 'q1.0~1'),
        ],
        "h": [
            ('L1p0', 'q1.0', 1, 1),
            ('L1p0', 'q1.3', -1, 1),
            ('L1p0', 'r0.0', -1, 2),
            ('L1p0', 'r1.0', 1, 1),
            ('L1p1', 'q1.0~1', -1, 1),
            ('L1p1', 'q1.1', 1, 2),
            ('L1p1', 'r0.1', -1, 1),
            ('L1p1', 'r1.1', 1, 1),
            ('L1p2', 'q1.1~3', -1, 1),
            ('L1p2', 'q1.2', 1, 1),
            ('L1p2', 'r0.2', -1, 1),
            ('L1p2', 'r1.2', 1, 2),
            ('L1p3', 'q1.2', -1, 4),
            ('L1p3', 'q1.3', 1, 1),
            ('L1p3', 'r1.3', 1, 1),
            ('sd1', 'q1.0', -1, 2),
            ('sd1', 'q1.0~1', 1, 5),
            ('sd2', 'r1.3', -1, 2),
            ('sd2', 'r1.3~2', 1, 5),
            ('sd3', 'q1.1', -1, 4),
            ('sd3', 'q1.1~3', 1, 3),
            ('u0', 'q0.0', 1, 2),
            ('u0', 'q0.3', -1, 3),
            ('u0', 'r0.0', 1, 1),
            ('u1', 'q2.0', 1, 4),
            ('u1', 'q2.3', -1, 1),
            ('u1', 'r1.0', -1, 1),
            ('v0', 'q0.0', -1, 3),
            ('v0', 'q0.1', 1, 1),
            ('v0', 'r0.1', 1, 2),
            ('v1', 'q2.0', -1, 1),
            ('v1', 'q2.1', 1, 4),
            ('v1', 'r1.1', -1, 1),
            ('w0', 'q0.1', -1, 3),
            ('w0', 'q0.2', 1, 1),
            ('w0', 'r0.2', 1, 2),
            ('w1', 'q2.1', -1, 1),
            ('w1', 'q2.2', 1, 4),
            ('w1', 'r1.2', -1, 1),
            ('x0', 'q0.2', -1, 6),
            ('x0', 'q0.3', 1, 1),
            ('x1', 'q2.2', -1, 1),
            ('x1', 'q2.3', 1, 1),
            ('x1', 'r1.3~2', -1, 4),
        ],
    },
    10: {
        "middle": 2,
        "rungs": [[0, 1, 2], [1, 2, 3], [0, 3]],
        "ops": [
        ],
        "h": [
            ('L1p0', 'q1.0', 1, 1),
            ('L1p0', 'q1.3', -1, 1),
            ('L1p0', 'r0.0', -1, 5),
            ('L1p1', 'q1.0', -1, 1),
            ('L1p1', 'q1.1', 1, 3),
            ('L1p1', 'r0.1', -1, 1),
            ('L1p1', 'r1.1', 1, 1),
            ('L1p2', 'q1.1', -1, 1),
            ('L1p2', 'q1.2', 1, 1),
            ('L1p2', 'r0.2', -1, 1),
            ('L1p2', 'r1.2', 1, 3),
            ('L1p3', 'q1.2', -1, 5),
            ('L1p3', 'q1.3', 1, 1),
            ('L1p3', 'r1.3', 1, 1),
            ('L2p0', 'q2.0', 1, 1),
            ('L2p0', 'q2.3', -1, 5),
            ('L2p0', 'r2.0', 1, 1),
            ('L2p1', 'q2.0', -1, 1),
            ('L2p1', 'q2.1', 1, 3),
            ('L2p1', 'r1.1', -1, 3),
            ('L2p2', 'q2.1', -1, 1),
            ('L2p2', 'q2.2', 1, 1),
            ('L2p2', 'r1.2', -1, 5),
            ('L2p3', 'q2.2', -1, 3),
            ('L2p3', 'q2.3', 1, 1),
            ('L2p3', 'r1.3', -1, 1),
            ('L2p3', 'r2.3', 1, 1),
            ('u0', 'q0.0', 1, 1),
            ('u0', 'q0.3', -1, 5),
            ('u0', 'r0.0', 1, 1),
            ('u1', 'q3.0', 1, 3),
            ('u1', 'q3.3', -1, 3),
            ('u1', 'r2.0', -1, 1),
            ('v0', 'q0.0', -1, 1),
            ('v0', 'q0.1', 1, 3),
            ('v0', 'r0.1', 1, 3),
            ('v1', 'q3.0', -1, 1),
            ('v1', 'q3.1', 1, 7),
            ('w0', 'q0.1', -1, 1),
            ('w0', 'q0.2', 1, 1),
            ('w0', 'r0.2', 1, 5),
            ('w1', 'q3.1', -1, 1),
            ('w1', 'q3.2', 1, 7),
            ('x0', 'q0.2', -1, 7),
            ('x0', 'q0.3', 1, 1),
            ('x1', 'q3.2', -1, 1),
            ('x1', 'q3.3', 1, 1),
            ('x1', 'r2.3', -1, 5),
        ],
    },
    11: {
        "middle": 2,
        "rungs": [[0, 1, 2], [1, 2, 3], [0, 1, 3]],
        "ops": [
            ('sub', 'r2.1', 'sd1', 'r2.1~1'),
        ],
        "h": [
            ('L1p0', 'q1.0', 1, 1),
            ('L1p0', 'q1.3', -1, 1),
            ('L1p0', 'r0.0', -1, 6),
            ('L1p1', 'q1.0', -1, 1),
            ('L1p1', 'q1.1', 1, 4),
            ('L1p1', 'r0.1', -1, 1),
            ('L1p1', 'r1.1', 1, 1),
            ('L1p2', 'q1.1', -1, 1),
            ('L1p2', 'q1.2', 1, 1),
            ('L1p2', 'r0.2', -1, 1),
            ('L1p2', 'r1.2', 1, 4),
            ('L1p3', 'q1.2', -1, 6),
            ('L1p3', 'q1.3', 1, 1),
            ('L1p3', 'r1.3', 1, 1),
            ('L2p0', 'q2.0', 1, 1),
            ('L2p0', 'q2.3', -1, 6),
            ('L2p0', 'r2.0', 1, 1),
            ('L2p1', 'q2.0', -1, 1),
            ('L2p1', 'q2.1', 1, 4),
            ('L2p1', 'r1.1', -1, 1),
            ('L2p1', 'r2.1', 1, 1),
            ('L2p2', 'q2.1', -1, 2),
            ('L2p2', 'q2.2', 1, 1),
            ('L2p2', 'r1.2', -1, 5),
            ('L2p3', 'q2.2', -1, 4),
            ('L2p3', 'q2.3', 1, 1),
            ('L2p3', 'r1.3', -1, 1),
            ('L2p3', 'r2.3', 1, 1),
            ('sd1', 'r2.1', -1, 2),
            ('sd1', 'r2.1~1', 1, 7),
            ('u0', 'q0.0', 1, 2),
            ('u0', 'q0.3', -1, 5),
            ('u0', 'r0.0', 1, 1),
            ('u1', 'q3.0', 1, 4),
            ('u1', 'q3.3', -1, 3),
            ('u1', 'r2.0', -1, 1),
            ('v0', 'q0.0', -1, 3),
            ('v0', 'q0.1', 1, 3),
            ('v0', 'r0.1', 1, 2),
            ('v1', 'q3.0', -1, 1),
            ('v1', 'q3.1', 1, 6),
            ('v1', 'r2.1~1', -1, 1),
            ('w0', 'q0.1', -1, 1),
            ('w0', 'q0.2', 1, 1),
            ('w0', 'r0.2', 1, 6),
            ('w1', 'q3.1', -1, 1),
            ('w1', 'q3.2', 1, 8),
            ('x0', 'q0.2', -1, 8),
            ('x0', 'q0.3', 1, 1),
            ('x1', 'q3.2', -1, 1),
            ('x1', 'q3.3', 1, 1),
            ('x1', 'r2.3', -1, 6),
        ],
    },
}
