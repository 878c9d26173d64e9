"""Configuration loading and canonical JSON reporting.

Rationals serialize as "p/q" strings, points as 5-element homogeneous
arrays, and floats through their shortest round-trip representation; key
order is sorted so a report is byte-identical across runs with one seed.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import ConfigError, ValidationFailure
from .fields import fmt_rational, parse_rational
from .pencil import QuadricPencil, SegreSymbol, normal_form, validate_segre
from .surface import SurfaceInstance

SCHEMA_VERSION = 1


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def rat(value) -> str:
    return fmt_rational(Fraction(value))


def fmt_scalar(value, field=None) -> str:
    if isinstance(value, (int, Fraction)):
        return rat(value)
    if field is not None:
        return field.fmt(value)
    return repr(value)


def fmt_complex(z) -> str:
    zr, zi = float(z.real), float(z.imag)
    return f"{zr!r}{'+' if zi >= 0 else '-'}{abs(zi)!r}j"


def point_payload(point):
    return [fmt_scalar(c, point.field) for c in point.coords]


def line_payload(line):
    if line.exactness == "exact":
        span = [point_payload(line.point_a), point_payload(line.point_b)]
    else:
        span = [[fmt_complex(c) for c in line.point_a],
                [fmt_complex(c) for c in line.point_b]]
    return {
        "span": span,
        "exactness": line.exactness,
        "residual_bound": repr(float(line.residual_bound)),
        "incidence": line.n_incident,
    }


# --------------------------------------------------------------------------
# configuration


class SurfaceConfig:
    """Parsed surface description plus options."""

    def __init__(self, raw):
        self.raw = raw
        self.order = int(raw.get("order", 8))
        self.seed = int(raw.get("seed", 0))
        self.tolerance = float(raw.get("tolerance", 1e-12))
        self.symbol = None
        self.params = None
        self.quadrics = None
        if "symbol" in raw:
            try:
                self.symbol = SegreSymbol.parse(raw["symbol"])
            except ValueError as exc:
                raise ConfigError(f"bad symbol: {exc}") from exc
            params = raw.get("params")
            if params is None:
                raise ConfigError("symbol input needs \"params\"")
            try:
                if isinstance(params, dict):
                    self.params = {k: parse_rational(v) for k, v in params.items()}
                else:
                    self.params = [parse_rational(v) for v in params]
            except Exception as exc:
                raise ConfigError(f"bad rational in params: {exc}") from exc
        elif "quadrics" in raw:
            mats = raw["quadrics"]
            if not (isinstance(mats, list) and len(mats) == 2):
                raise ConfigError("\"quadrics\" must hold two 5x5 matrices")
            out = []
            for M in mats:
                if len(M) != 5 or any(len(r) != 5 for r in M):
                    raise ConfigError("quadric matrices must be 5x5")
                try:
                    rows = [[parse_rational(c) for c in r] for r in M]
                except Exception as exc:
                    raise ConfigError(f"bad rational entry: {exc}") from exc
                if any(rows[i][j] != rows[j][i] for i in range(5) for j in range(5)):
                    raise ConfigError("quadric matrices must be symmetric")
                out.append(rows)
            self.quadrics = out
        else:
            raise ConfigError("config needs \"symbol\" or \"quadrics\"")

    @staticmethod
    def load(path) -> "SurfaceConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(
                f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        except OSError as exc:
            raise ConfigError(str(exc)) from exc
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        return SurfaceConfig(raw)

    def build(self) -> SurfaceInstance:
        try:
            if self.symbol is not None:
                pencil = normal_form(self.symbol, self.params)
            else:
                pencil = QuadricPencil(*self.quadrics)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        report = validate_segre(pencil)
        if not report.ok:
            raise ValidationFailure(
                f"surface validation failed: {report.failures}", report=report)
        return SurfaceInstance(pencil, order=self.order, seed=self.seed,
                               tolerance=self.tolerance)

    def echo(self):
        return self.raw


def load_surface_config(path) -> SurfaceInstance:
    return SurfaceConfig.load(path).build()
