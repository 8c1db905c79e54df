"""Display coverage: every numbered display in the proofs maps to checks, a definition, or is out of scope.

Blocks are numbered in order of appearance starting at the lemma section.
Mapping entries are check ids, theorem ids, or ``fn:module.attr`` references
to library functions that exercise the display directly.
"""

from __future__ import annotations

import importlib

from .registry import manifest

DEFINITION = "DEFINITION"
OUT_OF_SCOPE = "OUT-OF-SCOPE"
UNMAPPED = "UNMAPPED"

# (block, tag, label, status, mapping)
_ROWS = [
    (0, "sec2", "harmonic numbers of order r", DEFINITION, ["fn:combinatorics.harmonic"]),
    (1, "sec2", "alternating and double harmonic sums", DEFINITION, ["fn:combinatorics.harmonic", "fn:combinatorics.PrimeContext"]),
    (2, "sec2", "H_{p-1} mod p^2", None, ["wolstenholme.h1"]),
    (3, "sec2", "H_{p-1}(2) mod p", None, ["wolstenholme.h2"]),
    (4, "sec2", "three half-range harmonic congruences", None, ["lemma2.1.a", "lemma2.1.b", "lemma2.1.c"]),
    (5, "sec2", "weighted H_{2k} sums mod p^2", None, ["lemma2.2.a", "lemma2.2.b"]),
    (6, "sec2", "odd-weighted H_{2k}^2 sum", None, ["lemma2.2.c"]),
    (7, "sec2", "alternating k H_k sums", None, ["sec2.alt-khk.swap", "sec2.alt-khk", "sec2.khk-half"]),
    (8, "sec2", "H_{p-1}(-1)", None, ["sec2.alt-h1.split", "sec2.alt-h1"]),
    (9, "sec2", "k H_{2k} folded", None, ["sec2.kh2k.fold", "lemma2.2.a"]),
    (10, "sec2", "alternating double sum", None, ["sec2.double-alt"]),
    (11, "sec2", "H_{p-1}(-2)", None, ["sec2.alt-h2.split", "sec2.alt-h2"]),
    (12, "sec2", "alternating (k+1)H_k^2 chain", None,
     ["sec2.alt-hk2.expand", "sec2.alt-hk2.swap", "sec2.alt-hk2.closed", "sec2.alt-hk2"]),
    (13, "sec2", "alternating (k+1)H_k(2)", None, ["sec2.alt-h2k.closed", "sec2.alt-h2k"]),
    (14, "sec2", "(k+1)H_k^2", None, ["sec2.hk2"]),
    (15, "sec2", "(k+1)H_k(2)", None, ["sec2.h2k-weighted"]),
    (16, "sec2", "odd-weighted H_{2k}^2 folded", None, ["sec2.odd-h2k-sq.fold", "lemma2.2.c"]),
    (17, "sec3", "classical well-poised 3F2 evaluation", OUT_OF_SCOPE, []),
    (18, "sec3", "F for the quartic pair", None, ["wz.A.equation", "fn:wz.evaluate_term"]),
    (19, "sec3", "G for the quartic pair", None, ["wz.A.equation", "fn:wz.evaluate_term"]),
    (20, "sec3", "alpha certificate", None, ["wz.A.equation", "fn:wz.alpha"]),
    (21, "sec3", "WZ equation, quartic pair", None, ["wz.A.equation", "fn:wz.wz_residual"]),
    (22, "sec3", "row telescope", None, ["wz.A.row-telescope"]),
    (23, "sec3", "half-row telescope", None, ["wz.A.half-telescope"]),
    (24, "sec3", "G(n,0) closed form", None, ["fn:wz.g_closed_form_residual"]),
    (25, "sec3", "F at the half row", None, ["sec3.f-half"]),
    (26, "sec3", "half sum as binomials plus M", None, ["sec3.half-sum.identity"]),
    (27, "sec3", "the inner sum M", DEFINITION, ["sec3.m-expansion", "sec3.m-closed"]),
    (28, "sec3", "upper central binomial expansion", None, ["sec3.cb-plus.exact", "sec3.cb-plus.h11", "sec3.cb-plus"]),
    (29, "sec3", "lower central binomial expansion", None, ["sec3.cb-minus.exact", "sec3.cb-minus.h11", "sec3.cb-minus"]),
    (30, "sec3", "C(p-1,k) mod p^3", None, ["sec3.binom-p1"]),
    (31, "sec3", "C(2p-2,p-1-k) expansion", None, ["sec3.binom-2p2.exact", "sec3.binom-2p2.tail", "sec3.binom-2p2"]),
    (32, "sec3", "rational factor expansion", None, ["sec3.rational"]),
    (33, "sec3", "odd reciprocals", None, ["sec3.odd-recip.reflect", "sec3.odd-recip"]),
    (34, "sec3", "M over the squared central binomial", None, ["sec3.m-expansion"]),
    (35, "sec3", "Morley", None, ["sec3.morley"]),
    (36, "sec3", "M mod p^4", None, ["sec3.m-closed"]),
    (37, "sec3", "C((3p-3)/2,(p-1)/2)", None, ["sec3.binom-3h.exact", "sec3.binom-3h.h11", "sec3.binom-3h"]),
    (38, "sec3", "C(2p-1,p-1) mod p^3", None, ["sec3.binom-2p1"]),
    (39, "sec3", "powers of 2^{p-1}", None, ["sec3.fermat-power"]),
    (40, "sec3", "half sum to (p-3)/2 mod p^5", None, ["sec3.half-sum"]),
    (41, "sec3", "last term mod p^5", None, ["sec3.last-term.exact", "sec3.last-term"]),
    (42, "sec3", "half sum assembled", None, ["sec3.half-sum.split", "T1.1"]),
    (43, "sec4", "column telescope", None, ["sec4.column-telescope"]),
    (44, "sec4", "full-row telescope", None, ["wz.A.full-telescope"]),
    (45, "sec4", "F at row p", None, ["sec4.f-p"]),
    (46, "sec4", "full sum as a binomial sum", None, ["sec4.full-sum.identity"]),
    (47, "sec4", "five-piece split", None, ["sec4.split"]),
    (48, "sec4", "the G* summand", DEFINITION, ["sec4.split", "sec4.gstar-lower"]),
    (49, "sec4", "C(4p,2p+k)", None, ["sec4.binom-4p-2pk.exact", "sec4.binom-4p-2pk"]),
    (50, "sec4", "C(2p-2k,p-k)", None, ["sec4.binom-2p-2k"]),
    (51, "sec4", "C(2p+2k,p+k)", None, ["sec4.binom-2p+2k"]),
    (52, "sec4", "C(p+k,2k+1)", None, ["sec4.binom-pk"]),
    (53, "sec4", "lower G* term", None, ["sec4.gstar-lower"]),
    (54, "sec4", "lower rational factor", None, ["sec4.rational-lower"]),
    (55, "sec4", "lower G* sum", None, ["sec4.gstar-lower-sum"]),
    (56, "sec4", "upper G* range reflected", None, ["sec4.reflect"]),
    (57, "sec4", "C(4p,p+1+k)", None, ["sec4.binom-4p-p1k.exact", "sec4.binom-4p-p1k"]),
    (58, "sec4", "C(4p-2k,2p-k)C(2k,k)", None, ["sec4.binom-4p-2k.exact", "sec4.binom-4p-2k"]),
    (59, "sec4", "upper binomial ratio", None, ["sec4.upper-ratio"]),
    (60, "sec4", "C(4p,2p) mod p^3", None, ["sec4.binom-4p-2p"]),
    (61, "sec4", "upper rational factor", None, ["sec4.rational-upper"]),
    (62, "sec4", "upper G* sum", None, ["sec4.gstar-upper-sum"]),
    (63, "sec4", "odd reciprocals mod p^2", None, ["sec4.odd-recip.reflect", "sec4.odd-recip"]),
    (64, "sec4", "odd squared reciprocals", None, ["sec4.odd-recip2.reflect", "sec4.odd-recip2"]),
    (65, "sec4", "reflected harmonic number", None, ["sec4.h-reflect"]),
    (66, "sec4", "H_k/k", None, ["sec4.hk-over-k"]),
    (67, "sec4", "H_k/(2k+1)", None, ["sec4.hk-odd.reflect", "sec4.hk-odd"]),
    (68, "sec4", "H_{2k-1}/(2k+1)", None, ["sec4.h2k-odd.reflect", "sec4.h2k-odd"]),
    (69, "sec4", "C(4p,(5p-1)/2)", None, ["sec4.binom-4p-5h.exact", "sec4.binom-4p-5h"]),
    (70, "sec4", "C(3p-1,(3p-1)/2)", None, ["sec4.binom-3p1"]),
    (71, "sec4", "C(4p,p) chain", None, ["sec4.chain.a", "sec4.chain.b", "sec4.chain.c"]),
    (72, "sec4", "G*(0)", None, ["sec4.gstar-0"]),
    (73, "sec4", "G*(p-1)", None, ["sec4.gstar-last"]),
    (74, "sec4", "G*((p-1)/2)", None, ["sec4.gstar-mid"]),
    (75, "sec4", "G* total", None, ["sec4.split.piece-sum"]),
    (76, "sec4", "C(3p,p)C(2p,p)", None, ["sec4.binom-3p2p"]),
    (77, "sec4", "full quartic sum mod p^5", None, ["T1.2"]),
    (78, "sec5", "very-well-poised 7F6 transformation", OUT_OF_SCOPE, []),
    (79, "sec5", "F' for the cubic pair", None, ["wz.B.equation", "fn:wz.evaluate_term"]),
    (80, "sec5", "G' for the cubic pair", None, ["wz.B.equation", "fn:wz.evaluate_term"]),
    (81, "sec5", "beta certificate", None, ["wz.B.equation", "fn:wz.beta", "fn:wz.repair_certificate"]),
    (82, "sec5", "WZ equation, cubic pair", None, ["wz.B.equation", "fn:wz.wz_residual"]),
    (83, "sec5", "row telescope, cubic pair", None, ["wz.B.row-telescope"]),
    (84, "sec5", "full telescope from row 2", None, ["wz.B.full-telescope"]),
    (85, "sec5", "F' row sum at p", None, ["sec5.f-sum.wz", "sec5.f-sum.identity"]),
    (86, "sec5", "the cubic summand g_n", DEFINITION, ["sec5.delta"]),
    (87, "sec5", "g_n minus 48 G'(n,0) as a difference", None, ["sec5.delta", "fn:wz.gb_difference_residual"]),
    (88, "sec5", "summed difference", None, ["sec5.delta-sum"]),
    (89, "sec5", "reflected F' sum", None, ["sec5.reflect"]),
    (90, "sec5", "F* split", None, ["sec5.split"]),
    (91, "sec5", "the F* summand", DEFINITION, ["sec5.split", "sec5.fstar-lower.a"]),
    (92, "sec5", "C(4p-k-1,p)", None, ["sec5.binom-4pk1.exact", "sec5.binom-4pk1"]),
    (93, "sec5", "C(4p,2p)/C(2p,p)", None, ["sec5.ratio-4p2p"]),
    (94, "sec5", "central binomial identity", None, ["sec5.binom-identity"]),
    (95, "sec5", "binomial ratio mod p", None, ["sec5.ratio.exact", "sec5.ratio"]),
    (96, "sec5", "lower F* sum", None, ["sec5.fstar-lower.a", "sec5.fstar-lower.b", "sec5.fstar-lower"]),
    (97, "sec5", "C(2p,2k+2)/C(4p,2p-2-2k)", None, ["sec5.ratio-2p"]),
    (98, "sec5", "squared binomial ratio", None, ["sec5.ratio-sq"]),
    (99, "sec5", "C(3p+k,p)C(p-1,k)", None, ["sec5.binom-3pk"]),
    (100, "sec5", "upper F* sum", None, ["sec5.fstar-upper.exact", "sec5.fstar-upper.a", "sec5.fstar-upper"]),
    (101, "sec5", "sum 1/(4^k k)", None, ["sec5.inv4.reflect", "sec5.inv4"]),
    (102, "sec5", "sum 1/((2k-1)4^k)", None, ["sec5.inv4-odd.reflect", "sec5.inv4-odd"]),
    (103, "sec5", "Granville", None, ["sec5.granville"]),
    (104, "sec5", "power sums of 4^k", None, ["sec5.pow-sum.exact", "sec5.pow-sum"]),
    (105, "sec5", "F* pieces combined", None, ["sec5.fstar-pieces"]),
    (106, "sec5", "C(2p-1,(p-1)/2)", None, ["sec5.binom-2p1h.harmonic", "sec5.binom-2p1h"]),
    (107, "sec5", "C((7p-1)/2,p)", None, ["sec5.binom-7p.harmonic", "sec5.binom-7p"]),
    (108, "sec5", "ratios equal to 3/2", None, ["sec5.ratio-3-2.a", "sec5.ratio-3-2.b"]),
    (109, "sec5", "F*(p,p-1)", None, ["sec5.fstar-last.exact", "sec5.fstar-last"]),
    (110, "sec5", "F*(p,(p-1)/2)", None, ["sec5.fstar-mid.exact", "sec5.fstar-mid"]),
    (111, "sec5", "F' sum without k=0", None, ["sec5.a-sum"]),
    (112, "sec5", "F' sum with k=0", None, ["sec5.a-term0", "sec5.a-sum.full.a", "sec5.a-sum.full"]),
    (113, "sec5", "cubic tail mod p^3", None, ["sec5.cubic-tail"]),
    (114, "sec5", "full cubic sum assembled", None, ["sec5.cubic-split", "T1.3"]),
    (115, "sec6", "half telescope, cubic pair", None, ["wz.B.half-telescope"]),
    (116, "sec6", "F' at the half row", None, ["sec6.f-sum.wz", "sec6.f-sum.identity"]),
    (117, "sec6", "summed difference, half range", None, ["sec6.delta-sum"]),
    (118, "sec6", "C(2p-k,(p-1)/2)", None, ["sec6.binom-2pk.exact", "sec6.binom-2pk"]),
    (119, "sec6", "Sun's congruence", None, ["sec6.sun"]),
    (120, "sec6", "reflected half sum mod p^2", None, ["sec6.e-sum.a", "sec6.e-sum"]),
    (121, "sec6", "binomial ratio mod p^2", None, ["sec6.ratio"]),
    (122, "sec6", "C((3p-3)/2,(p-1)/2)C(p-1,(p-1)/2)", None, ["sec6.binom-3h"]),
    (123, "sec6", "same with squared central binomial", None, ["sec6.binom-3h-sq"]),
    (124, "sec6", "F' half sum mod p^3", None, ["sec6.reflect", "sec6.reflect-cong"]),
    (125, "sec6", "G'(k,0) half sum", None, ["sec6.g0-sum"]),
    (126, "sec6", "cubic half tail", None, ["sec6.cubic-tail"]),
    (127, "sec6", "half cubic sum assembled", None, ["sec6.cubic-split", "T1.4"]),
]


def rows() -> list[dict]:
    out = []
    for block, tag, label, status, mapping in _ROWS:
        if status is None:
            status = "MAPPED" if mapping else UNMAPPED
        out.append({"block": block, "section": tag, "label": label, "status": status, "mapping": list(mapping)})
    return out


def resolve_ref(ref: str) -> bool:
    """True if a mapping entry names something that exists."""
    from .. import theorems
    if ref.startswith("fn:"):
        mod, _, attr = ref[3:].rpartition(".")
        try:
            return hasattr(importlib.import_module(f"supercong.{mod}"), attr)
        except ImportError:
            return False
    return ref in theorems.SPECS or ref in {d.id for d in manifest()}


def unmapped() -> list[dict]:
    return [r for r in rows() if r["status"] == UNMAPPED]


def coverage_text() -> str:
    lines = ["block  section  status        mapping"]
    for r in rows():
        lines.append(f"#{r['block']:03d}   {r['section']:7}  {r['status']:12}  {', '.join(r['mapping']) or '-'}")
    return "\n".join(lines) + "\n"


def manifest_text() -> str:
    """One line per check: id, modulus, min_prime, k-range flag, anchor."""
    lines = [f"{'id':30} {'modulus':8} {'min_p':>5}  {'family':6}  anchor"]
    for d in manifest():
        mod = "exact" if d.r is None else f"p^{d.r}"
        fam = d.kname if d.parameterized_in_k else "-"
        lines.append(f"{d.id:30} {mod:8} {d.min_prime:5}  {fam:6}  {d.anchor}")
    return "\n".join(lines) + "\n"
