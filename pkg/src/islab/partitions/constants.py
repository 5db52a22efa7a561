"""The constant hierarchy 1/C << 1/n0 << ε << η << μ << γ << β << α << 1/k.

"a << b" is read concretely as a <= b^2 / 100. Values are exact Fractions
so that a constants file round-trips without binary rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from decimal import Decimal, InvalidOperation
from fractions import Fraction

ORDER = ("eps", "eta", "mu", "gamma", "beta", "alpha")
PSI_MODES = ("both", "sqrt", "square")

_ALIASES = {
    "eps": "eps", "epsilon": "eps", "ε": "eps",
    "eta": "eta", "η": "eta",
    "mu": "mu", "μ": "mu",
    "gamma": "gamma", "γ": "gamma",
    "beta": "beta", "β": "beta",
    "alpha": "alpha", "α": "alpha",
    "c": "C", "n0": "n0", "k": "k",
    "psi": "psi_mode", "psi-mode": "psi_mode", "psi_mode": "psi_mode", "ψ": "psi_mode",
    "validate": "validate",
}


def dominated(a: Fraction, b: Fraction) -> bool:
    return a <= b * b / 100


def ramsey_upper_bound(l: int, t: int) -> int:
    """R_l(t) <= l^(l t): an upper bound on the l-colour Ramsey number of K_t."""
    if l < 1 or t < 1:
        raise ValueError("l and t must be positive")
    if l * t * math.log2(max(l, 2)) > 10**6:
        raise OverflowError("bound exceeds a million bits; use ramsey_upper_bound_log2")
    return l ** (l * t)


def ramsey_upper_bound_log2(l: int, t: int) -> float:
    return l * t * math.log2(l) if l > 1 else 0.0


@dataclass(frozen=True)
class HierarchyConstants:
    k: int = 6
    eps: Fraction = Fraction(1, 10**190)
    eta: Fraction = Fraction(1, 10**94)
    mu: Fraction = Fraction(1, 10**46)
    gamma: Fraction = Fraction(1, 10**22)
    beta: Fraction = Fraction(1, 10**10)
    alpha: Fraction = Fraction(1, 10**4)
    n0: int = 10**382
    C: int = 10**766
    psi_mode: str = "both"
    validate: bool = True

    def __post_init__(self):
        for name in ORDER:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.psi_mode not in PSI_MODES:
            raise ValueError(f"psi mode must be one of {PSI_MODES}")
        if self.validate:
            problems = self.violations()
            if problems:
                raise ValueError("constant hierarchy violated: " + "; ".join(problems))

    def violations(self) -> list[str]:
        out = []
        vals = [getattr(self, name) for name in ORDER]
        for name, v in zip(ORDER, vals):
            if not 0 < v < 1:
                out.append(f"{name} must lie in (0, 1)")
        chain = list(zip(ORDER, vals)) + [("1/k", Fraction(1, self.k))]
        for (a, va), (b, vb) in zip(chain, chain[1:]):
            if not va < vb:
                out.append(f"{a} < {b} fails")
            elif not dominated(va, vb):
                out.append(f"{a} <= {b}^2/100 fails")
        if self.n0 < 1 or self.C < 1:
            out.append("n0 and C must be positive integers")
        else:
            if not dominated(Fraction(1, self.n0), self.eps):
                out.append("1/n0 <= eps^2/100 fails")
            if not dominated(Fraction(1, self.C), Fraction(1, self.n0)):
                out.append("1/C <= (1/n0)^2/100 fails")
        return out

    @property
    def psi_options(self) -> tuple[str, ...]:
        """Configured ψ choices in search order: β^{1/2} first, then β²."""
        return {"both": ("sqrt", "square"), "sqrt": ("sqrt",), "square": ("square",)}[self.psi_mode]

    @property
    def ramsey_t(self) -> int:
        return math.ceil(1 / self.gamma)

    @property
    def M_log2(self) -> float:
        """log2 of R_{2k-2}(ceil(1/γ)) + 1 via the l^{lt} bound (the +1 is below float resolution)."""
        return ramsey_upper_bound_log2(2 * self.k - 2, self.ramsey_t)

    def with_values(self, **kw) -> "HierarchyConstants":
        return replace(self, **kw)

    def to_text(self) -> str:
        lines = [f"k={self.k}"]
        for name in ORDER:
            v = getattr(self, name)
            lines.append(f"{name}={_fraction_text(v)}")
        lines += [f"n0={self.n0}", f"C={self.C}", f"psi={self.psi_mode}",
                  f"validate={'true' if self.validate else 'false'}"]
        return "\n".join(lines) + "\n"


def _fraction_text(v: Fraction) -> str:
    d = v.denominator
    s = str(d)
    if s[0] == "1" and set(s[1:]) <= {"0"}:
        return f"{v.numerator}e-{len(s) - 1}" if d > 1 else str(v.numerator)
    return f"{v.numerator}/{d}"


def _parse_value(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        a, b = text.split("/", 1)
        return Fraction(int(a), int(b))
    try:
        return Fraction(Decimal(text))
    except InvalidOperation as exc:
        raise ValueError(f"not a decimal number: {text!r}") from exc


def parse_constants(text: str, base: HierarchyConstants | None = None) -> HierarchyConstants:
    """Parse flat key=value lines (# comments allowed) on top of `base`."""
    kw: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        name = _ALIASES.get(key.lower(), _ALIASES.get(key))
        if name is None:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if name in ORDER:
            kw[name] = _parse_value(val)
        elif name in ("n0", "C", "k"):
            v = _parse_value(val)
            if v.denominator != 1:
                raise ValueError(f"line {lineno}: {key} must be an integer")
            kw[name] = int(v)
        elif name == "validate":
            kw[name] = val.lower() in ("1", "true", "yes")
        else:
            kw[name] = val
    base = base or HierarchyConstants()
    merged = {f.name: getattr(base, f.name) for f in fields(base)}
    merged.update(kw)
    return HierarchyConstants(**merged)


def load_constants(path: str) -> HierarchyConstants:
    with open(path, encoding="utf-8") as fh:
        return parse_constants(fh.read())


def desk_constants(k: int, alpha, beta, gamma, psi_mode: str = "both") -> HierarchyConstants:
    """Unvalidated constants for desk-scale experiments; only the order is enforced."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if not 0 < g < b < a < 1:
        raise ValueError("need 0 < gamma < beta < alpha < 1")
    return HierarchyConstants(k=k, eps=g / 8, eta=g / 4, mu=g / 2, gamma=g, beta=b, alpha=a,
                              n0=1, C=1, psi_mode=psi_mode, validate=False)
