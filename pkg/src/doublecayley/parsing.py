"""Text syntax for spinors, vectors of V14, and Chow ring expressions.

Spinor / vector grammar::

    expr     := [sign] term (sign term)*
    term     := [rational ['*']] atom | rational
    atom     := '1' | 'e' digits | 'f' digit
    rational := integer ['/' positive-integer]

A bare rational stands for that multiple of the scalar blade ``1``.  Digits
of an ``e`` atom are strictly increasing in 1..7.  ``f`` atoms are only legal
when parsing a vector.

Chow grammar::

    expr   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := base ['^' integer]
    base   := integer | 'tau[' parts ']' | 't' digit | '(' expr ')'
"""

from fractions import Fraction

from .errors import GradeError, ParseError

WHITESPACE = " \t\r\n"


def _fmt_coeff_term(coeff, atom, first):
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if atom == "1":
        body = str(mag)
    elif mag == 1:
        body = atom
    else:
        body = f"{mag}*{atom}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def format_spinor(x):
    from .clifford import degree_of, indices_of

    items = sorted(x.items(), key=lambda mv: (degree_of(mv[0]), indices_of(mv[0])))
    if not items:
        return "0"
    out = []
    for k, (m, v) in enumerate(items):
        atom = "1" if m == 0 else "e" + "".join(str(i) for i in indices_of(m))
        out.append(_fmt_coeff_term(v, atom, k == 0))
    return "".join(out)


def format_vector(v):
    terms = [(c, f"e{i + 1}") for i, c in enumerate(v.a) if c] + \
            [(c, f"f{i + 1}") for i, c in enumerate(v.b) if c]
    if not terms:
        return "0"
    return "".join(_fmt_coeff_term(c, atom, k == 0) for k, (c, atom) in enumerate(terms))


class _Scanner:
    def __init__(self, src):
        self.src = src
        self.pos = 0

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos] in WHITESPACE:
            self.pos += 1

    def peek(self):
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return self.src[start:self.pos]

    def at_end(self):
        return self.peek() == ""


# -- spinors and vectors -----------------------------------------------------

def _parse_linear(src, vector):
    """List of (coefficient, atom) pairs."""
    sc = _Scanner(src)
    terms = []
    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    while True:
        terms.append(_parse_term(sc, sign, vector))
        if sc.at_end():
            return terms
        ch = sc.peek()
        if ch not in "+-":
            raise ParseError(f"unexpected {ch!r}", sc.pos)
        sc.take()
        sign = -1 if ch == "-" else 1


def _parse_term(sc, sign, vector):
    ch = sc.peek()
    coeff = None
    if ch.isdigit():
        start = sc.pos
        num = sc.integer()
        if sc.peek() == "/":
            sc.take()
            den_pos = sc.pos
            den = sc.integer()
            if int(den) == 0:
                raise ParseError("zero denominator", den_pos)
            coeff = Fraction(int(num), int(den))
        else:
            coeff = Fraction(int(num))
        if sc.peek() == "*":
            sc.take()
            return sign * coeff, _parse_atom(sc, vector)
        if sc.peek() in ("e", "f") or sc.peek().isdigit():
            return sign * coeff, _parse_atom(sc, vector)
        if vector:
            raise ParseError("scalar term in a vector expression", start)
        return sign * coeff, "1"
    return Fraction(sign), _parse_atom(sc, vector)


def _parse_atom(sc, vector):
    sc.skip()
    start = sc.pos
    ch = sc.take()
    if ch == "1":
        if vector:
            raise ParseError("scalar atom '1' in a vector expression", start)
        return "1"
    if ch in ("e", "f"):
        try:
            digits = sc.integer() if sc.src[sc.pos:sc.pos + 1].isdigit() else ""
        except ParseError:
            digits = ""
        if not digits:
            raise ParseError(f"{ch!r} atom needs index digits", start)
        idx = [int(d) for d in digits]
        if any(not 1 <= d <= 7 for d in idx):
            raise ParseError(f"index out of range in {ch}{digits}", start)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ParseError(f"indices of {ch}{digits} must be strictly increasing", start)
        if ch == "f":
            if not vector:
                raise ParseError("f-atoms are only legal in vector context", start)
            if len(idx) != 1:
                raise ParseError("f-atom takes a single index", start)
        elif vector and len(idx) != 1:
            raise ParseError("only degree-one atoms are legal in vector context", start)
        return ch + digits
    raise ParseError(f"expected an atom, found {ch or 'end of input'!r}", start)


def parse_spinor(src, as_vector=False, require_parity=None):
    """Parse a spinor (ExteriorElement) or, with ``as_vector``, a Vector14.

    ``require_parity`` (0 or 1) rejects elements that are not purely of that
    parity.
    """
    from .clifford import ExteriorElement, Vector14

    terms = _parse_linear(src, as_vector)
    if as_vector:
        v = Vector14()
        for c, atom in terms:
            base = Vector14.e(int(atom[1])) if atom[0] == "e" else Vector14.f(int(atom[1]))
            v = v + base * c
        return v
    x = ExteriorElement()
    for c, atom in terms:
        idx = () if atom == "1" else tuple(int(d) for d in atom[1:])
        x = x + ExteriorElement.blade(*idx, coefficient=c)
    if require_parity is not None:
        ok = x.is_even() if require_parity == 0 else x.is_odd()
        if not ok:
            kind = "even" if require_parity == 0 else "odd"
            raise ParseError(f"expected an {kind} element, got mixed or wrong parity")
    return x


# -- Chow ring expressions ---------------------------------------------------

def parse_chow(src):
    """Evaluate a Chow ring expression to a homogeneous ChowClass."""
    sc = _Scanner(src)
    value = _chow_expr(sc)
    if not sc.at_end():
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    return value


def _chow_expr(sc):
    from .schubert import ChowClass

    sign = 1
    if sc.peek() in "+-":
        sign = -1 if sc.take() == "-" else 1
    start = sc.pos
    total = _chow_term(sc)
    if sign < 0:
        total = -total
    while sc.peek() in ("+", "-") and sc.peek():
        op_pos = sc.pos
        op = sc.take()
        rhs = _chow_term(sc)
        if rhs.grade != total.grade:
            raise ParseError(
                f"non-homogeneous sum: grade {total.grade} and grade {rhs.grade}", op_pos)
        total = total + rhs if op == "+" else total - rhs
    return total


def _chow_term(sc):
    value = _chow_factor(sc)
    while sc.peek() == "*":
        pos = sc.pos
        sc.take()
        rhs = _chow_factor(sc)
        value = _checked_product(value, rhs, pos)
    return value


def _checked_product(x, y, pos):
    from .schubert import multiply

    try:
        return multiply(x, y)
    except GradeError as exc:
        raise ParseError(str(exc), pos) from None


def _chow_factor(sc):
    from .schubert import ChowClass

    base = _chow_base(sc)
    if sc.peek() == "^":
        pos = sc.pos
        sc.take()
        n = int(sc.integer())
        value = ChowClass.unit()
        for _ in range(n):
            value = _checked_product(value, base, pos)
        return value
    return base


def _chow_base(sc):
    from .schubert import ChowClass, MAX_PART

    ch = sc.peek()
    start = sc.pos
    if ch.isdigit():
        return ChowClass.unit() * int(sc.integer())
    if ch == "(":
        sc.take()
        value = _chow_expr(sc)
        sc.expect(")")
        return value
    if sc.src.startswith("tau", sc.pos):
        sc.pos += 3
        sc.expect("[")
        parts = []
        if sc.peek() != "]":
            parts.append(int(sc.integer()))
            while sc.peek() == ",":
                sc.take()
                parts.append(int(sc.integer()))
        sc.expect("]")
        if any(p > MAX_PART for p in parts):
            raise ParseError(f"part exceeds {MAX_PART} in tau{parts}", start)
        if any(p <= 0 for p in parts) or any(a <= b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"tau{parts} is not a strict partition", start)
        return ChowClass.schubert(tuple(parts))
    if ch == "t":
        sc.take()
        pos = sc.pos
        d = sc.integer()
        if len(d) != 1 or not 1 <= int(d) <= MAX_PART:
            raise ParseError(f"special class t{d} must be t1..t{MAX_PART}", pos)
        return ChowClass.schubert((int(d),))
    raise ParseError(f"unexpected {ch or 'end of input'!r}", start)


def format_chow(c):
    items = c.items()
    if not items:
        return "0"
    out = []
    for k, (mu, v) in enumerate(items):
        atom = "tau[" + ",".join(str(p) for p in mu) + "]"
        sign = "-" if v < 0 else "+"
        body = atom if abs(v) == 1 else f"{abs(v)}*{atom}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
