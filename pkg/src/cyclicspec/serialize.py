"""JSON encoding of fields, polynomials, matrices, Higgs data and spectral data.

Field elements are strings ("3", "-1/2"); a polynomial in x is the list of
its coefficients in ascending degree; a polynomial in t over k[x] is a list
of such lists. Decoding errors carry a JSON path such as ``$.phi[1][0][2]``.
"""

from __future__ import annotations

import json

from .correspondence import EffectiveDivisor, SpectralData
from .errors import CycspecError
from .higgs import CyclicHiggsData, SLattice
from .polyalg.fields import field_from_json
from .polyalg.matrix import Matrix
from .polyalg.normal_forms import hermite_form
from .polyalg.poly import Poly, poly_ring
from .quiver import PathAlgebraElement


class SchemaError(CycspecError, ValueError):
    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{source}:{e.lineno}:{e.colno}", e.msg) from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _expect(cond, path, msg):
    if not cond:
        raise SchemaError(path, msg)


# ------------------------------------------------------------------ scalars and polynomials

def field_to_json(F) -> dict:
    return F.to_json()


def read_field(obj, path="$.field"):
    _expect(isinstance(obj, dict), path, "field must be an object")
    try:
        return field_from_json(obj)
    except (ValueError, KeyError, TypeError) as e:
        raise SchemaError(path, str(e)) from None


def elem_to_json(F, a) -> str:
    return F.to_str(a)


def read_elem(F, s, path):
    _expect(isinstance(s, (str, int)), path, "coefficient must be a string")
    try:
        return F.from_str(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(path, f"bad coefficient {s!r}: {e}") from None


def poly_to_json(f: Poly):
    """Ascending coefficients; nested for polynomials over k[x]."""
    base = f.ring.base
    if hasattr(base, "to_str"):
        return [base.to_str(c) for c in f.coeffs]
    return [poly_to_json(c) for c in f.coeffs]


def read_poly_x(F, obj, path, var="x") -> Poly:
    _expect(isinstance(obj, list), path, "polynomial must be a coefficient list")
    return Poly(poly_ring(F, var), [read_elem(F, c, f"{path}[{k}]") for k, c in enumerate(obj)])


def read_poly_tx(F, obj, path) -> Poly:
    _expect(isinstance(obj, list), path, "polynomial in t must be a list of polynomials in x")
    Rx = poly_ring(F, "x")
    return Poly(poly_ring(Rx, "t"), [read_poly_x(F, c, f"{path}[{k}]") for k, c in enumerate(obj)])


def matrix_to_json(M: Matrix):
    return [[poly_to_json(a) for a in row] for row in M.rows]


def read_matrix_x(F, obj, path, shape=None) -> Matrix:
    _expect(isinstance(obj, list) and all(isinstance(r, list) for r in obj), path, "matrix must be a list of rows")
    ncols = len(obj[0]) if obj else 0
    _expect(all(len(r) == ncols for r in obj), path, "ragged matrix")
    if shape is not None:
        _expect((len(obj), ncols) == tuple(shape), path, f"expected shape {tuple(shape)}, got {(len(obj), ncols)}")
    R = poly_ring(F, "x")
    rows = [[read_poly_x(F, a, f"{path}[{i}][{j}]") for j, a in enumerate(r)] for i, r in enumerate(obj)]
    return Matrix(R, rows, ncols)


# ------------------------------------------------------------------ Higgs data

def higgs_to_json(H: CyclicHiggsData) -> dict:
    return {"m": H.m, "field": field_to_json(H.field), "dims": list(H.dims),
            "phi": [matrix_to_json(A) for A in H.phi]}


def higgs_from_json(obj) -> CyclicHiggsData:
    _expect(isinstance(obj, dict), "$", "Higgs data must be an object")
    for key in ("m", "field", "dims", "phi"):
        _expect(key in obj, f"$.{key}", "missing")
    m = obj["m"]
    _expect(isinstance(m, int) and m >= 1, "$.m", "m must be a positive integer")
    F = read_field(obj["field"])
    dims = obj["dims"]
    _expect(isinstance(dims, list) and len(dims) == m and all(isinstance(p, int) and p >= 1 for p in dims),
            "$.dims", "dims must be m positive integers")
    phi = obj["phi"]
    _expect(isinstance(phi, list) and len(phi) == m, "$.phi", "phi must hold m matrices")
    mats = [read_matrix_x(F, A, f"$.phi[{i}]", (dims[(i + 1) % m], dims[i])) for i, A in enumerate(phi)]
    return CyclicHiggsData(m, F, dims, mats)


# ------------------------------------------------------------------ spectral data

def spectral_data_to_json(sd: SpectralData) -> dict:
    F = sd.c.ring.base.base
    return {
        "field": field_to_json(F),
        "c": poly_to_json(sd.c),
        "L0": {"rank": sd.L0.rank, "T": matrix_to_json(sd.L0.T)},
        "divisors": [matrix_to_json(D.lattice) for D in sd.divisors],
    }


def spectral_data_from_json(obj) -> SpectralData:
    _expect(isinstance(obj, dict), "$", "spectral data must be an object")
    for key in ("field", "c", "L0", "divisors"):
        _expect(key in obj, f"$.{key}", "missing")
    F = read_field(obj["field"])
    c = read_poly_tx(F, obj["c"], "$.c")
    _expect(c.degree() >= 1 and c.is_monic(), "$.c", "curve must be monic of positive degree in t")
    p = c.degree()
    L0 = obj["L0"]
    _expect(isinstance(L0, dict) and "rank" in L0 and "T" in L0, "$.L0", "needs rank and T")
    _expect(L0["rank"] == p, "$.L0.rank", f"rank must equal deg_t c = {p}")
    T = read_matrix_x(F, L0["T"], "$.L0.T", (p, p))
    divs = obj["divisors"]
    _expect(isinstance(divs, list) and divs, "$.divisors", "need at least one divisor")
    D = []
    for i, M in enumerate(divs):
        H = hermite_form(read_matrix_x(F, M, f"$.divisors[{i}]", (p, p)))
        _expect(H.ncols == p, f"$.divisors[{i}]", "ideal lattice must have full rank")
        D.append(EffectiveDivisor(H, c))
    return SpectralData(c, SLattice(p, T), D)


# ------------------------------------------------------------------ path algebra

def path_element_to_json(a: PathAlgebraElement) -> list:
    out = []
    for path, coef in sorted(a.terms.items(), key=lambda kv: (kv[0].length, kv[0].source)):
        out.append({"source": path.source, "target": path.target, "length": path.length,
                    "coeff": poly_to_json(coef)})
    return out
