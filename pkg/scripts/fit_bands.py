#!/usr/bin/env python3
"""Fit every band file in a directory and write the full report set:
fixed-width table, JSON document with residuals, and per-band plot data.

Usage: python scripts/fit_bands.py [bands_dir] [out_dir]
Defaults: data/bands -> reports/
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from qrotor.fit import fit_A
from qrotor.ingest import emit_plot_data, read_band_file, write_report
from qrotor.model import q_parameter_from_band


def main() -> int:
    bands_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data/bands")
    out_dir = Path(sys.argv[2]) if len(sys.argv) > 2 else Path("reports")
    out_dir.mkdir(parents=True, exist_ok=True)

    results = []
    for path in sorted(bands_dir.glob("*.band")):
        band = read_band_file(path).parsed
        qp = q_parameter_from_band(band)
        fit_q = fit_A(band, qp)
        fit_cl = fit_A(band, None)
        results.append((band, fit_q, fit_cl))
        (out_dir / f"{path.stem}.dat").write_bytes(emit_plot_data(band, fit_q, fit_cl))
        print(f"{band.name}: dim={qp.dim} tau={qp.tau:.4f} A={fit_q.A:.2f} keV "
              f"1e3*chi2={1e3 * fit_q.chi2:.2f} (classical {1e3 * fit_cl.chi2:.2f})")

    if not results:
        print(f"no *.band files under {bands_dir}", file=sys.stderr)
        return 1
    (out_dir / "report.txt").write_bytes(write_report(results))
    (out_dir / "report.json").write_bytes(write_report(results, as_json=True))
    print(f"wrote {out_dir}/report.txt, report.json and {len(results)} plot-data files")
    return 0


if __name__ == "__main__":
    sys.exit(main())
