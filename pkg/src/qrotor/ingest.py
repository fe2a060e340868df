"""Band data files, report tables, and plot-ready output.

Band files are line-oriented UTF-8:

    # nucleus: 162Dy
    # note: free-text provenance, may repeat
    2 80.66
    4 265.785
    ...

Spins are decimal (integer or .5), energies are keV.  Blank lines and
other ``#`` comments are ignored.  Parsing validates every band invariant
with a line-numbered diagnostic; serialization emits a canonical form that
round-trips byte-identically.  All report output is deterministic: fixed
formats, '.' decimal separator, no locale dependence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .fit import FitResult
from .model import BandData, BandError, spin_str, twice_spin

__all__ = [
    "BandParseError",
    "BandFile",
    "parse_band",
    "parse_band_file",
    "read_band_file",
    "write_band",
    "write_report",
    "emit_plot_data",
]


class BandParseError(BandError):
    """A band file failed validation; carries the offending line number
    (0 for file-level problems)."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line else ""
        super().__init__(f"{prefix}{message}")


@dataclass(frozen=True)
class BandFile:
    """A parsed band plus its file-level provenance."""

    path: Path | None
    parsed: BandData
    source_note: str | None = None


def parse_band(text: bytes | str) -> BandData:
    """Parse band-file text into validated BandData."""
    return parse_band_file(text).parsed


def parse_band_file(text: bytes | str, path: Path | None = None) -> BandFile:
    """Parse band-file text, keeping the provenance note lines."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    name: str | None = None
    notes: list[str] = []
    levels: list[tuple[int, float]] = []
    twostep: int | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("nucleus:"):
                if name is not None:
                    raise BandParseError(line_no, "duplicate '# nucleus:' header")
                name = body[len("nucleus:"):].strip()
                if not name:
                    raise BandParseError(line_no, "empty nucleus name")
            elif body.startswith("note:"):
                notes.append(body[len("note:"):].strip())
            continue

        if name is None:
            raise BandParseError(line_no, "data before the required '# nucleus:' header")
        tokens = line.split()
        if len(tokens) != 2:
            raise BandParseError(line_no, f"expected '<spin> <energy_keV>', got {len(tokens)} fields")
        try:
            twoj = twice_spin(float(tokens[0]))
        except ValueError:
            raise BandParseError(line_no, f"invalid spin {tokens[0]!r} (integer or half-integer)") from None
        try:
            energy = float(tokens[1])
        except ValueError:
            raise BandParseError(line_no, f"non-numeric energy {tokens[1]!r}") from None

        if levels:
            prev_j, prev_e = levels[-1]
            if twoj == prev_j:
                raise BandParseError(line_no, f"duplicate spin {spin_str(twoj)}")
            if twoj < prev_j:
                raise BandParseError(line_no, "spins must be strictly increasing")
            if twostep is None:
                twostep = twoj - prev_j
            elif twoj - prev_j != twostep:
                raise BandParseError(
                    line_no,
                    f"inconsistent spin step: {(twoj - prev_j) / 2} after {twostep / 2}",
                )
            if energy <= prev_e:
                raise BandParseError(line_no, "energies must be strictly increasing")
        levels.append((twoj, energy))

    if name is None:
        raise BandParseError(0, "missing '# nucleus:' header")
    if len(levels) < 3:
        raise BandParseError(0, f"band needs at least 3 levels, got {len(levels)}")

    band = BandData(name=name, levels=tuple(levels), twostep=twostep)
    note = "\n".join(notes) if notes else None
    return BandFile(path=path, parsed=band, source_note=note)


def read_band_file(path: Path | str) -> BandFile:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise BandError(f"cannot read band file: {exc}") from None
    return parse_band_file(raw, path=path)


def write_band(band: BandFile | BandData) -> bytes:
    """Serialize to the canonical band-file form (round-trip stable)."""
    if isinstance(band, BandFile):
        data, note = band.parsed, band.source_note
    else:
        data, note = band, None
    lines = [f"# nucleus: {data.name}"]
    if note:
        lines.extend(f"# note: {part}" for part in note.split("\n"))
    lines.extend(f"{spin_str(twoj)} {energy!r}" for twoj, energy in data.levels)
    return ("\n".join(lines) + "\n").encode("utf-8")


def _entry_fits(entry):
    band, fit_q, fit_cl = entry
    if fit_q is None and fit_cl is None:
        raise ValueError(f"no fit results supplied for band '{band.name}'")
    return band, fit_q, fit_cl


def write_report(results, as_json: bool = False) -> bytes:
    """Fixed-width fit table, or the full JSON document with residuals.

    ``results`` is a list of (band, deformed FitResult or None, classical
    FitResult or None) entries; at least one fit per entry.
    """
    if not results:
        raise ValueError("no fit results to report")
    if as_json:
        return _report_json(results)
    return _report_table(results)


def _report_table(results) -> bytes:
    width = max(8, max(len(_entry_fits(r)[0].name) for r in results))
    header = (
        f"{'nucleus':<{width}} {'tau':>8} {'A[keV]':>8} {'1e3*chi2':>10} "
        f"{'rms[keV]':>9} {'rms_cl[keV]':>12}"
    )
    lines = [header]
    for entry in results:
        band, fit_q, fit_cl = _entry_fits(entry)
        main = fit_q if fit_q is not None else fit_cl
        tau = f"{fit_q.qp.tau:.4f}" if fit_q is not None else "-"
        rms_cl = f"{fit_cl.rms:.2f}" if fit_cl is not None else "-"
        lines.append(
            f"{band.name:<{width}} {tau:>8} {main.A:>8.2f} {1e3 * main.chi2:>10.2f} "
            f"{main.rms:>9.2f} {rms_cl:>12}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


def _fit_json(band: BandData, result: FitResult) -> dict:
    return {
        "nucleus": band.name,
        "tau": result.qp.tau if result.qp is not None else None,
        "dim": result.qp.dim if result.qp is not None else None,
        "A_keV": result.A,
        "chi2_MeV2": result.chi2,
        "rms_keV": result.rms,
        "variant": result.variant.value,
        "residuals": [
            {"j": r.j, "exp_keV": r.exp_kev, "theo_keV": r.theo_kev} for r in result.residuals
        ],
    }


def _report_json(results) -> bytes:
    rows = []
    for entry in results:
        band, fit_q, fit_cl = _entry_fits(entry)
        for result in (fit_q, fit_cl):
            if result is not None:
                rows.append(_fit_json(band, result))
    return (json.dumps(rows, indent=2) + "\n").encode("utf-8")


def emit_plot_data(band: BandData, fit_q: FitResult, fit_cl: FitResult) -> bytes:
    """Whitespace-separated columns ready for plotting tools:
    j, E_exp, E_q, E_classical, residual_q, residual_classical (keV)."""
    lines = [
        f"# nucleus: {band.name}",
        "# j exp_keV theo_q_keV theo_classical_keV resid_q_keV resid_classical_keV",
    ]
    for (twoj, _), rq, rc in zip(band.levels, fit_q.residuals, fit_cl.residuals):
        lines.append(
            f"{spin_str(twoj)} {rq.exp_kev:.3f} {rq.theo_kev:.3f} {rc.theo_kev:.3f} "
            f"{rq.diff_kev:.3f} {rc.diff_kev:.3f}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
