"""Line-based text formats for instances and solutions.

Instance::

    # comment
    p <n> <m>
    e <u> <v>          (m lines, vertices 1..n)
    s <d1> ... <dL>
    o <vd|ed|ea[,...]>
    k <k>              (or instead of o/k: b <kvd> <ked> <kea>)

Solution: ``YES`` followed by ``vd <v>`` / ``ed <u> <v>`` / ``ea <u> <v>``
lines, or the single line ``NO``.
"""

from __future__ import annotations

from .graph import OPS, AnyInstance, DegreeSequence, EditSet, ExtendedInstance, Graph, Instance, edge


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_graph_lines(text: str) -> tuple[Graph, list[tuple[int, str, list[str]]]]:
    """Parse the p/e part; returns the graph and the remaining (lineno, tag, args) lines."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    rest = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *args = line.split()
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate p line")
            vals = _ints(args, lineno)
            if len(vals) != 2 or min(vals) < 0:
                raise ParseError(lineno, "p line needs two nonnegative counts")
            n, m = vals
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge before p line")
            vals = _ints(args, lineno)
            if len(vals) != 2:
                raise ParseError(lineno, "e line needs two vertices")
            u, v = vals
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            e = edge(u, v)
            if e in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add(e)
            edges.append(e)
        else:
            rest.append((lineno, tag, args))
    if n is None:
        raise ParseError(1, "missing p line")
    if len(edges) != m:
        raise ParseError(header_line, f"header announces {m} edges, found {len(edges)}")
    return Graph(range(1, n + 1), edges), rest


def parse_instance(text: str) -> AnyInstance:
    g, rest = parse_graph_lines(text)
    sigma = ops = k = budgets = None
    mode_line = {}
    for lineno, tag, args in rest:
        if tag == "s":
            if sigma is not None:
                raise ParseError(lineno, "duplicate s line")
            vals = _ints(args, lineno)
            if any(x < 0 for x in vals):
                raise ParseError(lineno, "negative entry in degree sequence")
            sigma = DegreeSequence(vals)
        elif tag == "o":
            names = [x for a in args for x in a.split(",") if x]
            bad = [x for x in names if x not in OPS]
            if bad or not names:
                raise ParseError(lineno, f"unknown operations {bad or names}")
            ops = frozenset(names)
            mode_line["A"] = lineno
        elif tag == "k":
            vals = _ints(args, lineno)
            if len(vals) != 1 or vals[0] < 0:
                raise ParseError(lineno, "k line needs one nonnegative integer")
            k = vals[0]
            mode_line["A"] = lineno
        elif tag == "b":
            vals = _ints(args, lineno)
            if len(vals) != 3 or min(vals) < 0:
                raise ParseError(lineno, "b line needs three nonnegative budgets")
            budgets = vals
            mode_line["B"] = lineno
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if len(mode_line) == 2:
        raise ParseError(max(mode_line.values()), "both o/k and b budget lines present")
    if sigma is None:
        raise ParseError(len(text.splitlines()) or 1, "missing s line")
    if budgets is not None:
        return ExtendedInstance(g, sigma, *budgets)
    if ops is None or k is None:
        raise ParseError(len(text.splitlines()) or 1, "need either o and k lines or a b line")
    return Instance(g, sigma, ops, k)


def format_instance(inst: AnyInstance) -> str:
    g = inst.G
    if list(g.vertices) != list(range(1, g.n + 1)):
        raise ValueError("instance vertices must be 1..n to be written")
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    lines.append(" ".join(["s"] + [str(x) for x in inst.sigma]))
    if isinstance(inst, Instance):
        lines.append("o " + ",".join(op for op in OPS if op in inst.ops))
        lines.append(f"k {inst.k}")
    else:
        lines.append(f"b {inst.k_vd} {inst.k_ed} {inst.k_ea}")
    return "\n".join(lines) + "\n"


def format_solution(e: EditSet | None) -> str:
    if e is None:
        return "NO\n"
    lines = ["YES"]
    lines += [f"vd {v}" for v in sorted(e.U)]
    lines += [f"ed {u} {v}" for u, v in sorted(e.D)]
    lines += [f"ea {u} {v}" for u, v in sorted(e.A)]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> EditSet | None:
    lines = [(i, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise ParseError(1, "empty solution")
    first_line, first = lines[0]
    if first == ["NO"] and len(lines) == 1:
        return None
    if first != ["YES"]:
        raise ParseError(first_line, "solution must start with YES or be NO")
    U, D, A = set(), set(), set()
    for lineno, (tag, *args) in lines[1:]:
        vals = _ints(args, lineno)
        if tag == "vd" and len(vals) == 1:
            U.add(vals[0])
        elif tag in ("ed", "ea") and len(vals) == 2:
            if vals[0] == vals[1]:
                raise ParseError(lineno, "loop in solution edge")
            (D if tag == "ed" else A).add(edge(*vals))
        else:
            raise ParseError(lineno, f"bad solution line {tag!r}")
    return EditSet(U, D, A)
