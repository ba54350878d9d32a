#!/usr/bin/env python3
"""Survey the gauge invariance checks over every built-in Chevalley pair.

For each (algebra, bicharacter twist) pair this builds the twisted algebra,
tabulates Tr(S^n) and the regular-representation indicators on both sides,
and runs the beta / gamma / regular-object checks.  Everything is exact;
a nonempty diff column would be a counterexample, not noise.

Usage: python scripts/run_gauge_survey.py [--seed INT]
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hopfgauge import zoo
from hopfgauge.hopf import ord_antipode
from hopfgauge.structure import is_chevalley
from hopfgauge.twist import (
    beta_fixed_check,
    gamma_coproduct_check,
    gamma_power,
    gamma_unity_check,
    grouplike_check,
    invariance_report,
    regular_object_test,
    twist_hopf,
    validate_twist,
)


def pairs():
    z = lambda m: zoo.group_algebra(zoo.cyclic_group(m))
    yield "kZ2 (c=1)", z(2), 1, 2, 1
    yield "kZ3 (c=1)", z(3), 1, 3, 1
    yield "kZ4 (c=1)", z(4), 1, 4, 1
    yield "kZ6 (c=1)", z(6), 1, 6, 1
    yield "Sweedler (c=1)", zoo.sweedler(), 1, 2, 1
    yield "Taft(3) (c=1)", zoo.taft(3), 1, 3, 1
    yield "Taft(3) (c=2)", zoo.taft(3), 1, 3, 2
    yield "Taft(4) (c=1)", zoo.taft(4), 1, 4, 1
    yield "genTaft(2,2) (c=1)", zoo.generalized_taft(2, 2), 1, 4, 1


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'pair':22} {'dim':>3} {'chev':>5} {'diffs':>5} {'beta':>5} "
          f"{'gamma':>5} {'regobj':>18} {'secs':>6}")
    for label, H, gen, order, c in pairs():
        t0 = time.time()
        F = zoo.bicharacter_twist(H, H.basis_vec(gen), order, c)
        T = validate_twist(H, F)
        pair = twist_hopf(H, T)
        chev = is_chevalley(pair.base)
        rep = invariance_report(H, T, pair=pair)
        beta = beta_fixed_check(pair.base, T, chev.radical)
        _, ord_s2 = ord_antipode(pair.base)
        gp = gamma_power(T, pair.base, ord_s2)
        gamma_ok = (
            grouplike_check(pair.twisted, gp)
            and gamma_coproduct_check(pair.base, T)
            and gamma_unity_check(pair.base, T, ord_s2)
        )
        ro = regular_object_test(pair.base, T, seed=args.seed, chevalley=chev)
        diffs = len(rep.trace_diffs) + len(rep.kmn_diffs) + (0 if rep.ord_match else 1)
        print(
            f"{label:22} {H.dim:>3} {str(chev.chevalley):>5} {diffs:>5} "
            f"{str(beta.difference_in_radical):>5} {str(gamma_ok):>5} "
            f"{ro.status:>18} {time.time() - t0:6.2f}"
        )


if __name__ == "__main__":
    main()
