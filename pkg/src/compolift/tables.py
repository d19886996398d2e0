"""Published code fixtures: 12 binary [36,18] codes and their 30 certified lifts.

The automorphism-group orders are stored as annotations exactly as reported;
they are never recomputed. Lifts carry the claimed (family, gamma, beta) and
distance 12; `search.verify_record` re-derives all of it from the first rows.
"""

from __future__ import annotations

from . import r1
from .analysis import FAMILY_1, CodeParams
from .search import CodeRecord

# id, construction, d, rB, rC, rD, |Aut| annotation
_BINARY = (
    ("C1", "omega1", 6, "0,0,0,0,0,1,0,1,1", "1,0,1,1,1,0,1,0,1", None, "2^2*3^2"),
    ("C2", "omega1", 6, "0,0,0,0,1,1,0,1,1", "1,0,0,1,0,1,1,1,0", None, "2^2*3^2"),
    ("C3", "omega1", 8, "0,0,1,0,0,1,0,0,1", "1,0,0,1,1,0,1,1,1", None, "2^2*3^2"),
    ("C4", "omega1", 8, "0,1,0,0,0,1,0,1,1", "1,0,0,1,0,0,1,1,1", None, "2^2*3^2"),
    ("C5", "omega2", 6, "0,0,0,0,0,1", "1,1,1,0,0,1", "1,1,1,0,1,0", "2^5*3^4*5"),
    ("C6", "omega2", 6, "0,0,0,0,1,1", "0,0,0,0,1,1", "1,1,1,1,0,1", "2^5*3^4*5"),
    ("C7", "omega2", 6, "0,0,0,0,1,1", "0,1,1,0,1,1", "0,1,1,1,0,0", "2^5*3^2"),
    ("C8", "omega2", 6, "0,0,1,0,0,1", "0,0,1,1,1,0", "1,1,1,0,0,1", "2^5*3^2"),
    ("C9", "omega3", 6, "0,0,0,0,0,1", "0,1,1,0,1,1", "1,0,1,1,0,1", "2^5*3^2"),
    ("C10", "omega3", 6, "0,0,0,0,0,1", "1,1,1,0,0,1", "1,1,1,0,1,0", "2^5*3^4*5"),
    ("C11", "omega3", 6, "0,0,0,0,1,1", "0,0,0,0,1,1", "1,1,1,1,0,1", "2^5*3^4*5"),
    ("C12", "omega3", 6, "0,0,0,0,1,1", "0,1,1,0,0,1", "1,1,0,1,0,1", "2^5*3^2"),
)

# id, parent, rB, rC, rD, gamma, beta, |Aut| annotation
_LIFTS = (
    ("L1", "C1", "u,0,u,u,u,1,u,u+1,1", "1,0,1,1,u+1,0,1,u,1", None, 0, 192, "36"),
    ("L2", "C1", "u,0,0,u,0,1,u,1,1", "1,0,u+1,1,u+1,0,1,u,u+1", None, 0, 198, "36"),
    ("L3", "C1", "u,u,0,u,u,1,u,1,u+1", "1,u,u+1,1,u+1,0,1,0,u+1", None, 0, 336, "36"),
    ("L4", "C1", "0,u,0,0,0,1,0,1,u+1", "1,u,u+1,1,u+1,0,1,0,u+1", None, 18, 234, "36"),
    ("L5", "C1", "u,u,0,u,0,1,u,u+1,1", "1,u,u+1,1,1,u,1,0,u+1", None, 18, 345, "36"),
    ("L6", "C1", "0,u,0,0,0,1,0,u+1,1", "1,u,1,1,u+1,u,1,u,1", None, 18, 378, "36"),
    ("L7", "C1", "u,u,u,u,0,1,u,u+1,u+1", "1,u,1,1,u+1,0,1,0,1", None, 18, 396, "36"),
    ("L8", "C1", "0,0,u,0,u,1,0,1,u+1", "1,u,1,1,1,0,1,u,1", None, 18, 441, "36"),
    ("L9", "C1", "u,u,0,u,0,1,u,1,u+1", "1,u,1,1,1,0,1,u,1", None, 18, 453, "36"),
    ("L10", "C2", "0,u,0,0,1,1,0,1,u+1", "1,u,u,1,u,u+1,1,1,0", None, 0, 219, "36"),
    ("L11", "C2", "u,0,u,u,1,1,u,u+1,u+1", "1,u,0,1,0,1,1,u+1,u", None, 0, 345, "36"),
    ("L12", "C2", "0,0,u,0,1,1,0,1,u+1", "1,u,0,1,0,1,1,1,0", None, 0, 408, "36"),
    ("L13", "C2", "u,0,0,u,1,u+1,u,u+1,u+1", "1,0,u,1,0,u+1,1,u+1,0", None, 18, 261, "36"),
    ("L14", "C2", "u,u,u,u,1,1,u,1,u+1", "1,0,0,1,u,1,1,u+1,0", None, 18, 270, "36"),
    ("L15", "C2", "u,0,u,u,1,u+1,u,1,u+1", "1,0,u,1,u,1,1,u+1,0", None, 18, 357, "36"),
    ("L16", "C3", "u,u,1,u,0,1,u,0,1", "1,u,0,1,u+1,u,1,1,u+1", None, 0, 120, "36"),
    ("L17", "C3", "u,u,1,u,0,1,u,u,1", "1,0,u,1,1,0,1,1,u+1", None, 0, 282, "36"),
    ("L18", "C3", "u,u,1,u,0,u+1,u,0,1", "1,u,0,1,u+1,u,1,1,u+1", None, 0, 300, "36"),
    ("L19", "C3", "u,u,1,u,0,u+1,u,0,1", "1,u,u,1,1,0,1,1,1", None, 18, 336, "36"),
    ("L20", "C3", "u,0,1,u,0,1,u,u,1", "1,0,0,1,1,0,1,u+1,u+1", None, 36, 435, "36"),
    ("L21", "C4", "0,1,u,0,u,1,0,u+1,u+1", "1,u,u,1,u,u,1,u+1,u+1", None, 0, 366, "36"),
    ("L22", "C4", "u,1,u,u,u,1,u,1,u+1", "1,u,0,1,0,0,1,u+1,1", None, 0, 372, "36"),
    ("L23", "C4", "0,1,u,0,u,1,0,u+1,u+1", "1,0,0,1,0,0,1,u+1,u+1", None, 0, 384, "36"),
    ("L24", "C4", "u,1,u,u,u,1,u,1,u+1", "1,u,u,1,u,0,1,u+1,1", None, 0, 390, "36"),
    ("L25", "C4", "u,1,0,u,0,1,u,u+1,1", "1,u,0,1,0,0,1,1,u+1", None, 0, 399, "36"),
    ("L26", "C4", "u,1,u,u,u,1,u,u+1,1", "1,0,u,1,0,0,1,u+1,u+1", None, 18, 264, "36"),
    ("L27", "C4", "u,1,0,u,u,u+1,u,u+1,1", "1,0,u,1,0,u,1,1,u+1", None, 18, 285, "36"),
    ("L28", "C4", "0,1,u,0,0,u+1,0,1,1", "1,u,u,1,u,0,1,1,1", None, 18, 300, "36"),
    ("L29", "C7", "0,0,0,u,1,1", "u,1,u+1,u,1,1", "u,u+1,1,u+1,0,0", 0, 471, "144"),
    ("L30", "C9", "0,u,u,u,u,1", "u,1,1,u,u+1,1", "u+1,u,u+1,1,u,u+1", 0, 621, "432"),
)

# The 30 claimed-new (gamma, beta) pairs of the W72_1 family.
NEW_ENUMERATOR_PAIRS: dict[int, tuple[int, ...]] = {
    0: (120, 192, 198, 219, 282, 300, 336, 345, 366, 372, 384, 390, 399, 408, 471, 621),
    18: (234, 261, 264, 270, 285, 300, 336, 345, 357, 378, 396, 441, 453),
    36: (435,),
}

_BINARY_BY_ID = {row[0]: row for row in _BINARY}


def binary_records() -> list[CodeRecord]:
    out = []
    for rec_id, construction, d, rb, rc, rd, aut in _BINARY:
        out.append(
            CodeRecord(
                id=rec_id,
                construction=construction,
                ring="F2",
                rb=r1.parse_vector(rb),
                rc=r1.parse_vector(rc),
                rd=r1.parse_vector(rd) if rd else None,
                params=CodeParams(n=36, k=18, d=d, code_type="I"),
                aut=aut,
            )
        )
    return out


def lift_records() -> list[CodeRecord]:
    out = []
    for rec_id, parent, rb, rc, rd, gamma, beta, aut in _LIFTS:
        construction = _BINARY_BY_ID[parent][1]
        out.append(
            CodeRecord(
                id=rec_id,
                construction=construction,
                ring="R1",
                rb=r1.parse_vector(rb),
                rc=r1.parse_vector(rc),
                rd=r1.parse_vector(rd) if rd else None,
                params=CodeParams(
                    n=72, k=36, d=12, code_type="I", family=FAMILY_1, gamma=gamma, beta=beta
                ),
                parent_id=parent,
                aut=aut,
            )
        )
    return out


def all_records() -> list[CodeRecord]:
    return binary_records() + lift_records()
