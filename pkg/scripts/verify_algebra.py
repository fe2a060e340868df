#!/usr/bin/env python3
"""Stress the operator-algebra identities over a dense sweep of space
sizes and spins, reporting the worst deviation per identity and timing.

Usage: python scripts/verify_algebra.py [max_l]   (default 500)
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from qrotor.bp_space import (
    build_space,
    check_angle_completeness,
    check_angle_cycling,
    check_angle_orthonormality,
    check_cyclic_shift,
    check_lowering,
    check_quantum_plane,
    check_shift_power,
    check_unitarity,
)
from qrotor.qnum import QParameter, RegimeError
from qrotor.suq2 import build_irrep, check_casimir, check_commutators


def main() -> int:
    max_l = int(sys.argv[1]) if len(sys.argv) > 1 else 500
    l_values = sorted({1, 2, 3, 5, 10, 25, 50, 100, 250, max_l})
    spins = [0.5, 1.0, 1.5, 2.0, 2.5, 5.0, 7.5, 10.0, 15.0, 30.0]

    start = time.perf_counter()
    worst: dict[str, float] = {}

    def note(name, dev):
        worst[name] = max(worst.get(name, 0.0), dev)

    for l in l_values:
        for theta0 in (0.0, 0.6, 2.5):
            space = build_space(l, theta0)
            note("quantum-plane", check_quantum_plane(space))
            note("cyclic-shift", check_cyclic_shift(space))
            note("unitarity", check_unitarity(space))
            note("angle-orthonormality", check_angle_orthonormality(space))
            note("angle-completeness", check_angle_completeness(space))
            note("angle-cycling", check_angle_cycling(space))
            note("lowering", check_lowering(space))
            if space.dim <= 101:
                note("shift-power", check_shift_power(space))

    skipped = 0
    for l in l_values:
        qp = QParameter.from_dim(2 * l + 1)
        for j in spins:
            try:
                irrep = build_irrep(j, qp)
            except RegimeError:
                skipped += 1
                continue
            note("commutators", check_commutators(irrep))
            note("casimir", check_casimir(irrep))

    elapsed = time.perf_counter() - start
    width = max(len(k) for k in worst)
    for name, dev in sorted(worst.items()):
        print(f"{name:<{width}}  worst deviation {dev:.3e}")
    print(f"\n{len(l_values)} space sizes up to 2l+1 = {2 * max_l + 1}, "
          f"{skipped} (size, spin) pairs outside the operating regime skipped, "
          f"{elapsed:.1f} s")
    return 0 if all(dev <= 1e-10 for dev in worst.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
