"""Named test matrices shared by the test-suite and the scripts."""

from __future__ import annotations

from .matrix import CoxeterMatrix, direct_sum, preset

A1 = preset("A1")


def _finite() -> dict:
    out = {}
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4"]:
        out[name] = preset(name)
    for m in range(3, 13):
        out[f"I2({m})"] = preset(f"I2({m})")
    sums = {
        "A1+A1": ["A1", "A1"],
        "A1+A1+A1": ["A1", "A1", "A1"],
        "A1+A1+A1+A1": ["A1", "A1", "A1", "A1"],
        "A1+A2": ["A1", "A2"],
        "A1+B2": ["A1", "B2"],
        "A1+I2(5)": ["A1", "I2(5)"],
        "A1+I2(8)": ["A1", "I2(8)"],
        "A1+A1+A2": ["A1", "A1", "A2"],
        "A2+A2": ["A2", "A2"],
        "A1+A3": ["A1", "A3"],
        "B2+B2": ["B2", "B2"],
        "I2(5)+I2(7)": ["I2(5)", "I2(7)"],
        "A1+H3": ["A1", "H3"],
        "A2+B3": ["A2", "B3"],
        "A1+D4": ["A1", "D4"],
        "A3+A3": ["A3", "A3"],
        "A2+H3": ["A2", "H3"],
        "A1+B4": ["A1", "B4"],
        "B2+H3": ["B2", "H3"],
    }
    for name, parts in sums.items():
        out[name] = direct_sum(*(preset(p) for p in parts))
    return out


def _infinite() -> dict:
    inf = "inf"
    return {
        "free2": CoxeterMatrix.from_pairs(2, {}),
        "free3": CoxeterMatrix.from_pairs(3, {}),
        "odd_pair_and_even": CoxeterMatrix.from_pairs(3, {(0, 1): 5, (0, 2): 4}),
        "odd_pair_hanging_on_core": CoxeterMatrix.from_pairs(
            4, {(0, 1): 3, (1, 2): 2, (1, 3): 4, (2, 3): 2}),
        "two_odd_pairs": CoxeterMatrix.from_pairs(4, {(0, 1): 3, (2, 3): 7, (1, 2): inf}),
        "affine_A2": CoxeterMatrix.from_pairs(3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}),
        "affine_B2": CoxeterMatrix.from_pairs(3, {(0, 1): 4, (1, 2): 4, (0, 2): 2}),
        "affine_G2": CoxeterMatrix.from_pairs(3, {(0, 1): 6, (1, 2): 3, (0, 2): 2}),
        "right_angled_pentagon": CoxeterMatrix.from_pairs(
            5, {(0, 1): 2, (1, 2): 2, (2, 3): 2, (3, 4): 2, (0, 4): 2}),
        "strong_even_square": CoxeterMatrix.from_pairs(
            4, {(0, 1): 4, (1, 2): 8, (2, 3): 2, (0, 3): 4}),
        "path_5_4": CoxeterMatrix.from_pairs(3, {(0, 1): 5, (1, 2): 4, (0, 2): 2}),
        "hyperbolic_3_7": CoxeterMatrix.from_pairs(3, {(0, 1): 3, (1, 2): 7, (0, 2): 2}),
    }


FINITE = _finite()
INFINITE = _infinite()
ALL = {**FINITE, **INFINITE}
