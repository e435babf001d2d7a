"""Text literals.

    point    (a,b,...)
    set      {p1;p2;...}
    perm     [i1,...,in]
    element  ([i1,...,in]|{p1;...})

Formatting never emits whitespace; parsing ignores it.  Sets may be written in
any order but not with repeated points.
"""
from .core import FinPointSet, format_point, format_point_set
from .errors import ParseError
from .monoid import format_element, make_element
from .permutations import Perm, format_perm

__all__ = [
    "format_element",
    "format_perm",
    "format_point",
    "format_point_set",
    "parse_element",
    "parse_perm",
    "parse_point",
    "parse_point_set",
]


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        return ParseError(message, (self.pos if pos is None else pos) + 1, self.text)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            raise self.error("expected a positive integer", start)
        return value

    def int_list(self, open_, close, sep):
        self.expect(open_)
        values = [self.integer()]
        while self.peek() == sep:
            self.pos += 1
            values.append(self.integer())
        self.expect(close)
        return values

    def point(self):
        start = self.pos
        coords = self.int_list("(", ")", ",")
        if len(coords) < 2:
            raise self.error("points need at least 2 coordinates", start)
        return tuple(coords)

    def point_set(self):
        self.expect("{")
        points = []
        seen = set()
        if self.peek() != "}":
            while True:
                self.skip_ws()
                start = self.pos
                p = self.point()
                if p in seen:
                    raise self.error(f"duplicate point {format_point(p)}", start)
                if points and len(p) != len(points[0]):
                    raise self.error("points of different dimensions", start)
                seen.add(p)
                points.append(p)
                if self.peek() != ";":
                    break
                self.pos += 1
        self.expect("}")
        return points

    def perm(self):
        self.skip_ws()
        start = self.pos
        images = self.int_list("[", "]", ",")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise self.error(f"{images} is not a permutation", start)
        return Perm(images)

    def end(self):
        if self.peek():
            raise self.error("trailing characters")


def _run(text, rule):
    s = _Scanner(text)
    value = rule(s)
    s.end()
    return value


def parse_point(text):
    return _run(text, _Scanner.point)


def parse_perm(text):
    return _run(text, _Scanner.perm)


def parse_point_set(text, n=None):
    points = _run(text, _Scanner.point_set)
    if n is None and not points:
        raise ParseError("cannot infer the dimension of an empty set", 1, text)
    return FinPointSet(points, n if n is not None else len(points[0]))


def _element(s):
    s.expect("(")
    sigma = s.perm()
    s.expect("|")
    s.skip_ws()
    set_start = s.pos
    points = s.point_set()
    s.expect(")")
    if points and len(points[0]) != sigma.n:
        raise s.error(f"points have dimension {len(points[0])} but the permutation has degree {sigma.n}", set_start)
    return sigma, points


def parse_element(text):
    """Parse an element literal such as ``([2,1]|{(1,2);(3,1)})``."""
    sigma, points = _run(text, _element)
    return make_element(sigma, FinPointSet(points, sigma.n))
