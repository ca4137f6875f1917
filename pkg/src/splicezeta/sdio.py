"""Line-oriented text format for diagrams, builders, and a random generator.

Document format, one directive per line, `#` starts a comment:

    node <id> [N=<int> nu=<int>]
    edge <id1> <id2> <d1> <d2>
    arrow <id> <dec> <N> <nu>

Multiplicity caches are serializable so spliced diagrams, whose caches
cannot be recomputed from the linking formulas, round-trip losslessly.
"""

from __future__ import annotations

import random

from .diagram import Arrowhead, Diagram, Edge, check_valid, validate
from .errors import DegenerateBranch, ParseError, ValidationError
from .refine import det2


def parse_sd(text, validated=True):
    """Parse a diagram document; raises ParseError or ValidationError.

    With validated=False the structural invariants are not enforced, which
    lets callers report violations themselves.
    """
    nodes = []
    caches = {}
    edges = []
    arrows = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "node":
            if len(args) not in (1, 3):
                raise ParseError(lineno, col, "node takes an id and optionally N=, nu=")
            name = args[0]
            if name in seen:
                raise ParseError(lineno, col, f"duplicate node {name}")
            seen.add(name)
            nodes.append(name)
            if len(args) == 3:
                vals = {}
                for tok in args[1:]:
                    if "=" not in tok:
                        raise ParseError(lineno, col, f"expected key=value, got {tok!r}")
                    k, _, v = tok.partition("=")
                    if k not in ("N", "nu"):
                        raise ParseError(lineno, col, f"unknown cache key {k!r}")
                    vals[k] = _int(v, lineno, col)
                if set(vals) != {"N", "nu"}:
                    raise ParseError(lineno, col, "cache needs both N= and nu=")
                caches[name] = (vals["N"], vals["nu"])
        elif kind == "edge":
            if len(args) != 4:
                raise ParseError(lineno, col, "edge takes two ids and two decorations")
            edges.append(Edge(args[0], args[1],
                              _int(args[2], lineno, col), _int(args[3], lineno, col)))
        elif kind == "arrow":
            if len(args) != 4:
                raise ParseError(lineno, col, "arrow takes id, dec, N, nu")
            arrows.append(Arrowhead(args[0], _int(args[1], lineno, col),
                                    _int(args[2], lineno, col), _int(args[3], lineno, col)))
        else:
            raise ParseError(lineno, col, f"unknown directive {kind!r}")
    d = Diagram(nodes, edges, arrows, caches)
    return check_valid(d) if validated else d


def _int(tok, lineno, col):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, col, f"expected an integer, got {tok!r}") from None


def write_sd(d):
    """Canonical document: nodes sorted, edges sorted by endpoints."""
    lines = []
    for v in d.nodes:
        c = d.cache(v)
        if c is None:
            lines.append(f"node {v}")
        else:
            lines.append(f"node {v} N={c[0]} nu={c[1]}")
    for e in d.edges:
        lines.append(f"edge {e.u} {e.v} {e.du} {e.dv}")
    for a in d.arrows:
        lines.append(f"arrow {a.node} {a.dec} {a.N} {a.nu}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Builders for the bundled diagrams.
# ---------------------------------------------------------------------------


def builder_monomial(m, m_prime, i, i_prime):
    """One node, decorations 1, 1; the diagram of a monomial with form weights.

    The two arrowheads carry (m, i) and (m_prime, i_prime).
    """
    if (m, i) == (0, 0) or (m_prime, i_prime) == (0, 0):
        raise DegenerateBranch("a branch pair (N, nu) must not be (0, 0)")
    return check_valid(Diagram(
        ["n1"],
        [],
        [Arrowhead("n1", 1, m, i), Arrowhead("n1", 1, m_prime, i_prime)],
    ))


def builder_cusp(a, b):
    """Resolution diagram of the cusp with form x^a y^b (dx wedge dy).

    Three nodes in a chain decorated 1-3 / 2-2, the f-arrowhead (1, 1) at
    the center, and form arrowheads (0, a+1), (0, b+1) at the outer nodes.
    """
    if a < 0 or b < 0:
        raise DegenerateBranch("form exponents must be nonnegative")
    return check_valid(Diagram(
        ["n1", "n2", "n3"],
        [Edge("n1", "n2", 1, 3), Edge("n2", "n3", 2, 2)],
        [Arrowhead("n2", 1, 1, 1),
         Arrowhead("n1", 1, 0, a + 1),
         Arrowhead("n3", 1, 0, b + 1)],
    ))


def builder_nv_example2(i1, i2, i3, k):
    """Two-node-pair singularity diagram with four form parameters.

    Five nodes; the central node n3 has legs decorated 3, 4 and the edge to
    the arrow node n4 decorated 1-66; n4 continues to the leaf n5 with 5-14
    and carries the double arrowhead (1, k).  Form arrowheads (0, i1),
    (0, i2), (0, i3) sit at the leaves n1, n2, n5.
    """
    if 0 in (i1, i2, i3):
        raise DegenerateBranch("a form-only arrowhead needs nu != 0")
    return check_valid(Diagram(
        ["n1", "n2", "n3", "n4", "n5"],
        [Edge("n1", "n3", 2, 3), Edge("n2", "n3", 1, 4),
         Edge("n3", "n4", 1, 66), Edge("n4", "n5", 5, 14)],
        [Arrowhead("n4", 1, 1, k),
         Arrowhead("n1", 1, 0, i1),
         Arrowhead("n2", 1, 0, i2),
         Arrowhead("n5", 1, 0, i3)],
    ))


def builder_xy2_chain():
    """Two-node chain diagram of x * y^2 with trivial form data."""
    return check_valid(Diagram(
        ["n1", "n2"],
        [Edge("n1", "n2", 1, 2)],
        [Arrowhead("n1", 1, 1, 1), Arrowhead("n2", 1, 2, 1)],
    ))


EXAMPLES = {
    "monomial": lambda: builder_monomial(1, 1, 1, 1),
    "monomial-2311": lambda: builder_monomial(2, 3, 1, 1),
    "cusp": lambda: builder_cusp(0, 0),
    "cusp-x4y5": lambda: builder_cusp(4, 5),
    "cusp-x2y4": lambda: builder_cusp(2, 4),
    "cusp-x3y3": lambda: builder_cusp(3, 3),
    "nv2": lambda: builder_nv_example2(1, 1, 1, 1),
    "xy2": builder_xy2_chain,
}


def example(name):
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(EXAMPLES))}")
    return EXAMPLES[name]()


# ---------------------------------------------------------------------------
# Random diagrams for property tests.
# ---------------------------------------------------------------------------


def random_diagram(seed, n_moves):
    """Valid random diagram grown from a monomial seed by blow-up moves.

    Moves: insert the mediant node on an edge or between a node and one of
    its arrowheads (both are blow-ups and keep all edge determinants at 1),
    or attach a fresh decoration-1 arrowhead with small (N, nu), nu >= 1.
    Every intermediate diagram is valid by construction.
    """
    rng = random.Random(seed)
    d = builder_monomial(rng.randint(1, 3), rng.randint(1, 3),
                         rng.randint(1, 3), rng.randint(1, 3))
    for _ in range(n_moves):
        move = rng.random()
        if move < 0.45 and d.edges:
            d = _blow_up_edge(d, rng.choice(list(d.edges)))
        elif move < 0.8:
            d = _blow_up_arrow(d, rng.choice(list(d.arrows)))
        else:
            v = rng.choice(list(d.nodes))
            n_val = rng.randint(0, 3)
            nu_val = rng.randint(1, 4)
            d = Diagram(d.nodes, d.edges,
                        list(d.arrows) + [Arrowhead(v, 1, n_val, nu_val)])
    violations = validate(d)
    if violations:
        raise ValidationError(violations)
    return d


def _fresh(d, base):
    k = 1
    while f"{base}{k}" in d.nodes:
        k += 1
    return f"{base}{k}"


def _blow_up_edge(d, e):
    from .diagram import cone_vector

    w_l = cone_vector(d, e, e.u)
    dv, outer = cone_vector(d, e, e.v)
    w_r = (outer, dv)
    if det2(w_l, w_r) != 1:
        return d
    mid = (w_l[0] + w_r[0], w_l[1] + w_r[1])
    name = _fresh(d, "b")
    edges = [f for f in d.edges if f is not e]
    edges.append(Edge(e.u, name, e.du, mid[1]))
    edges.append(Edge(name, e.v, mid[0], e.dv))
    return Diagram(list(d.nodes) + [name], edges, d.arrows)


def _blow_up_arrow(d, arrow):
    if arrow.dec != 1:
        return d
    v = arrow.node
    outer = d.outer_product(v, exclude_arrow=arrow)
    name = _fresh(d, "b")
    # mediant of (1, outer) and (0, 1) is (1, outer + 1)
    edges = list(d.edges) + [Edge(v, name, 1, outer + 1)]
    arrows = list(d.arrows)
    arrows.remove(arrow)
    arrows.append(Arrowhead(name, 1, arrow.N, arrow.nu))
    return Diagram(list(d.nodes) + [name], edges, arrows)
