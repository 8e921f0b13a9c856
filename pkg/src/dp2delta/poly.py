"""Exact univariate polynomials in v, stored as coefficient tuples (c0, c1, ...)."""

from fractions import Fraction


def trim(p):
    p = [Fraction(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def const(c):
    return trim([c])


def affine(c0, c1):
    return trim([c0, c1])


V = (Fraction(0), Fraction(1))


def padd(*ps):
    n = max((len(p) for p in ps), default=0)
    return trim([sum((p[i] for p in ps if i < len(p)), Fraction(0)) for i in range(n)])


def pneg(p):
    return tuple(-x for x in p)


def psub(p, q):
    return padd(p, pneg(q))


def pscale(c, p):
    return trim([c * x for x in p])


def pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return trim(out)


def peval(p, v):
    acc = Fraction(0) if not isinstance(v, float) else 0.0
    for c in reversed(p):
        acc = acc * v + c
    return acc


def pderiv(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def antiderivative(p):
    return trim([Fraction(0)] + [c / (i + 1) for i, c in enumerate(p)])


def integrate(p, a, b):
    F = antiderivative(p)
    return peval(F, b) - peval(F, a)


def integrate_pieces(pieces):
    """Sum of exact integrals over [(a, b, poly), ...]."""
    return sum((integrate(p, a, b) for a, b, p in pieces), Fraction(0))


def degree(p):
    return len(p) - 1


def to_str(p, var="v"):
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    s = "".join(f" {sg} {b}" for sg, b in terms).strip()
    if s.startswith("+ "):
        s = s[2:]
    elif s.startswith("- "):
        s = "-" + s[2:]
    return s


def min_on_interval(p, a, b):
    """Exact minimum of a polynomial of degree <= 2 on [a, b]."""
    cands = [a, b]
    if degree(p) == 2:
        crit = -p[1] / (2 * p[2])
        if a < crit < b:
            cands.append(crit)
    elif degree(p) > 2:
        raise ValueError("only degree <= 2 supported")
    return min(peval(p, x) for x in cands)


def is_nonincreasing(p, a, b):
    d = pderiv(p)
    return degree(d) <= 1 and max(peval(d, a), peval(d, b)) <= 0


def from_expr(text, var="v"):
    """Parse a polynomial expression such as "(4-3*v)**2/2" exactly."""
    import ast

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return const(node.value)
        if isinstance(node, ast.Name) and node.id == var:
            return V
        if isinstance(node, ast.UnaryOp):
            x = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return pneg(x)
            if isinstance(node.op, ast.UAdd):
                return x
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return padd(a, b)
            if isinstance(node.op, ast.Sub):
                return psub(a, b)
            if isinstance(node.op, ast.Mult):
                return pmul(a, b)
            if isinstance(node.op, ast.Div):
                if degree(b) != 0:
                    raise ValueError(f"division by a non-constant in {text!r}")
                return pscale(1 / b[0], a)
            if isinstance(node.op, ast.Pow):
                if degree(b) > 0 or b and b[0].denominator != 1 or (b and b[0] < 0):
                    raise ValueError(f"bad exponent in {text!r}")
                out = const(1)
                for _ in range(int(b[0]) if b else 0):
                    out = pmul(out, a)
                return out
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(ast.parse(text, mode="eval"))
