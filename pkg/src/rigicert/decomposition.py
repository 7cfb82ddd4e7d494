"""Block decomposition with virtual/redundant edges, the quadratic-solubility
classifier, and the reduction engine that drives every 3-connected non-basic
Laman graph down to a basic graph or the doublet.

Two different decompositions coexist deliberately.  `decompose_unique` keeps
redundant virtual edges (connectivity bookkeeping for the reduction engine);
`qs_classify` re-examines freedom-0 blocks as plain Laman graphs and never
records a redundant edge.  Conflating them misclassifies blocks such as
K4-minus-an-edge, which is quadratically soluble yet 3-connected once its
redundant edge is included.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import InputError, InternalInvariantError
from .graph import (
    Block,
    BlockDecomposition,
    Edge,
    Graph,
    SeparationEvent,
    SeparationPair,
    canonical_form,
    connected_components,
    contract_edge,
    edge,
    freedom_number,
    induced_subgraph,
    is_m_connected,
    is_planar,
    separation_pairs,
)
from .rigidity import (
    internal_vertices,
    is_basic,
    is_contractible,
    is_laman,
    make_surgery_spec,
    maximal_mi_subgraph,
    mi_proper_subgraphs,
    surgery,
)


def _block_separation_pairs(b: Block) -> list[SeparationPair]:
    """Separation pairs of a working block, virtual and redundant edges included."""
    g = b.subgraph
    if g.n < 4:
        return []
    return separation_pairs(g)


def _split_block(b: Block, pair: SeparationPair) -> tuple[list[Block], SeparationEvent]:
    """One separation: re-close components over the pair and add the virtual
    edge, marking it redundant where the core already has freedom 0."""
    a, c = pair.pair
    g = b.subgraph
    pair_edge = (a, c)
    if pair_edge in b.virtual_edges:
        raise InternalInvariantError(
            "separation pair coincides with a virtual edge; "
            "a separation pair should never be reused"
        )
    rest = induced_subgraph(g, g.vertices - {a, c})
    comps = connected_components(rest)
    if len(comps) < 2:
        raise InputError(f"pair {pair.pair} does not separate the block")
    had_edge = pair_edge in g.edges
    parts: list[Block] = []
    freedoms: list[int] = []
    for comp in sorted(comps, key=sorted):
        w = comp | {a, c}
        sub = induced_subgraph(g, w)
        virt = frozenset(e for e in b.virtual_edges if e in sub.edges)
        red = frozenset(e for e in b.redundant_flags if e in sub.edges)
        core_free = freedom_number(sub.without_edges(red))
        freedoms.append(core_free)
        if had_edge:
            parts.append(Block(sub, virt, red))
        else:
            new_sub = sub.with_edges([pair_edge])
            new_virt = virt | {pair_edge}
            new_red = red | ({pair_edge} if core_free == 0 else frozenset())
            parts.append(Block(new_sub, new_virt, new_red))
    _assert_freedom_pattern(had_edge, freedoms, pair.pair)
    event = SeparationEvent(pair_edge, g.vertices, tuple(freedoms), had_edge)
    return parts, event


def _assert_freedom_pattern(had_edge: bool, freedoms: list[int], pair: Edge) -> None:
    if any(f < 0 for f in freedoms):
        raise InternalInvariantError(f"separation at {pair} produced a block with negative freedom")
    if had_edge:
        if any(f != 0 for f in freedoms):
            raise InternalInvariantError(
                f"separation at {pair} with the edge present must give all-zero freedoms, got {freedoms}"
            )
    else:
        if sorted(freedoms) != [0] + [1] * (len(freedoms) - 1):
            raise InternalInvariantError(
                f"separation at {pair} must give one freedom-0 block and freedom-1 rest, got {freedoms}"
            )


def decompose_unique(g: Graph, rng: random.Random | None = None) -> BlockDecomposition:
    """The unique decomposition into 3-cycles and 3-connected blocks.

    The optional rng scrambles the separation order; the resulting block set
    is provably order-independent, which the test-suite exercises.
    """
    if not is_laman(g):
        raise InputError("block decomposition is defined for Laman graphs")
    if g.n < 4:
        raise InputError("block decomposition needs at least 4 vertices")
    work = [Block(g)]
    done: list[Block] = []
    history: list[SeparationPair] = []
    events: list[SeparationEvent] = []
    while work:
        if rng is None:
            b = work.pop(0)
            pairs = _block_separation_pairs(b)
            chosen = pairs[0] if pairs else None
        else:
            i = rng.randrange(len(work))
            b = work.pop(i)
            pairs = _block_separation_pairs(b)
            chosen = rng.choice(pairs) if pairs else None
        if chosen is None:
            done.append(b)
            continue
        parts, event = _split_block(b, chosen)
        history.append(chosen)
        events.append(event)
        work.extend(parts)
    for b in done:
        if not (b.is_triangle() or is_m_connected(b.subgraph, 3)):
            raise InternalInvariantError("final block is neither a 3-cycle nor 3-connected")
        if not is_laman(b.core()):
            raise InternalInvariantError("final block core is not maximally independent")
    if done and not any(not b.redundant_flags for b in done):
        raise InternalInvariantError("no block is free of redundant virtual edges")
    done.sort(key=lambda b: sorted(b.subgraph.vertices))
    return BlockDecomposition(tuple(done), tuple(history), tuple(events))


class Verdict(Enum):
    QS = "QS"
    NOT_RS_PROVEN_PLANAR = "NOT_RS_PROVEN_PLANAR"
    NOT_RS_CONJECTURED = "NOT_RS_CONJECTURED"


@dataclass(frozen=True)
class QSClassification:
    verdict: Verdict
    witness_blocks: tuple[Block, ...]


def qs_classify(g: Graph) -> QSClassification:
    """Quadratic solubility by recursive triangle decomposition.

    Freedom-1 parts get the virtual edge and freedom-0 parts are re-examined
    bare; a 3-connected leaf larger than a triangle is a witness that the
    graph is not quadratically soluble.  A planar witness makes the overall
    not-RS verdict proven; otherwise it rests on the conjecture.
    """
    if not is_laman(g):
        raise InputError("QS classification is defined for Laman graphs")
    witnesses: list[Block] = []

    def recurse(h: Graph, virt: frozenset[Edge]) -> None:
        if h.n == 3 and h.e == 3:
            return
        pairs = separation_pairs(h) if h.n >= 4 else []
        if not pairs:
            witnesses.append(Block(h, virt & h.edges))
            return
        a, c = pairs[0].pair
        pair_edge = (a, c)
        rest = induced_subgraph(h, h.vertices - {a, c})
        had_edge = pair_edge in h.edges
        for comp in sorted(connected_components(rest), key=sorted):
            sub = induced_subgraph(h, comp | {a, c})
            f = freedom_number(sub)
            if had_edge:
                if f != 0:
                    raise InternalInvariantError(
                        f"separation with edge present gave freedom {f}"
                    )
                recurse(sub, virt & sub.edges)
            elif f == 0:
                recurse(sub, virt & sub.edges)
            elif f == 1:
                recurse(sub.with_edges([pair_edge]), (virt & sub.edges) | {pair_edge})
            else:
                raise InternalInvariantError(
                    f"separation of a Laman graph produced freedom {f}"
                )

    recurse(g, frozenset())
    if not witnesses:
        verdict = Verdict.QS
    elif any(is_planar(b.subgraph) for b in witnesses):
        verdict = Verdict.NOT_RS_PROVEN_PLANAR
    else:
        verdict = Verdict.NOT_RS_CONJECTURED
    return QSClassification(verdict, tuple(witnesses))


def is_doublet(g: Graph) -> bool:
    """The unique 3-connected non-basic Laman graph on 6 vertices."""
    return g.n == 6 and is_laman(g) and is_m_connected(g, 3) and not is_basic(g)


class StepKind(Enum):
    SURGERY = "SURGERY"
    CONTRACTION = "CONTRACTION"
    BLOCK_SPLIT = "BLOCK_SPLIT"


class TerminalKind(Enum):
    BASIC = "BASIC"
    DOUBLET = "DOUBLET"


@dataclass(frozen=True)
class StepRecord:
    kind: StepKind
    input_graph: Graph
    output_graphs: tuple[Graph, ...]
    detail: dict


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[StepRecord, ...]
    terminal: Graph
    terminal_kind: TerminalKind
    terminals: tuple[tuple[Graph, TerminalKind], ...]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


def _check_no_internal_mi(g: Graph, context: str) -> None:
    for w in mi_proper_subgraphs(g):
        if internal_vertices(g, w):
            raise InternalInvariantError(
                f"{context}: maximally independent proper subgraph {sorted(w)} has an internal vertex"
            )


def reduce_step(g: Graph) -> tuple[list[Graph], list[StepRecord]]:
    """One round of the reduction: surgery, then either a connectivity-safe
    contraction or a contraction followed by a block split.

    Every emitted graph is 3-connected, Laman, and strictly smaller unless the
    round was a pure surgery on an internal-vertex-free subgraph (in which
    case the follow-up contraction shrinks it).
    """
    _require(is_laman(g), "reduce_step requires a Laman graph")
    _require(is_m_connected(g, 3), "reduce_step requires a 3-connected graph")
    _require(not is_basic(g), "reduce_step requires a non-basic graph (already terminal)")
    _require(g.n > 6, "reduce_step requires more than 6 vertices (doublet is terminal)")

    r = maximal_mi_subgraph(g, prefer_internal=True)
    if r is None:
        raise InternalInvariantError("non-basic graph has no maximally independent proper subgraph")
    spec = make_surgery_spec(g, r)
    h = surgery(spec)
    records = [
        StepRecord(
            StepKind.SURGERY,
            g,
            (h,),
            {"replaced": r, "attachment": spec.attachment_vertices},
        )
    ]
    if internal_vertices(g, r.vertices):
        return [h], records

    # No candidate had an internal vertex, so the surgered graph has none
    # either; the contraction case split below relies on that, so check it.
    _check_no_internal_mi(h, "after surgery")

    cycle = spec.attachment_vertices
    cycle_edges = sorted(
        edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    )
    for e in cycle_edges:
        if not is_contractible(h, e):
            raise InternalInvariantError(f"surgery cycle edge {e} is not contractible")

    for f in h.sorted_edges():
        if is_contractible(h, f) and is_m_connected(contract_edge(h, f), 3):
            contracted = contract_edge(h, f)
            records.append(StepRecord(StepKind.CONTRACTION, h, (contracted,), {"edge": f}))
            return [contracted], records

    e = cycle_edges[0]
    contracted = contract_edge(h, e)
    records.append(StepRecord(StepKind.CONTRACTION, h, (contracted,), {"edge": e}))
    decomposition = decompose_unique(contracted)
    emitted: list[Graph] = []
    for b in decomposition.blocks:
        if b.redundant_flags:
            continue
        block_graph = b.core()
        if not is_m_connected(block_graph, 3):
            raise InternalInvariantError(
                "redundant-free separation block is not 3-connected; the case split guarantees it"
            )
        emitted.append(block_graph)
    if not emitted:
        raise InternalInvariantError("no redundant-free block to recurse into; one always exists")
    emitted.sort(key=canonical_form)
    records.append(
        StepRecord(
            StepKind.BLOCK_SPLIT,
            contracted,
            tuple(emitted),
            {"decomposition": decomposition, "chosen_blocks": tuple(emitted)},
        )
    )
    return emitted, records


def reduce_to_terminal(g: Graph) -> ReductionTrace:
    """Depth-first reduction until every branch hits a basic graph or the doublet."""
    _require(is_laman(g), "reduction requires a Laman graph")
    _require(is_m_connected(g, 3), "reduction requires a 3-connected graph")
    steps: list[StepRecord] = []
    terminals: list[tuple[Graph, TerminalKind]] = []
    stack = [g]
    while stack:
        h = stack.pop()
        if is_basic(h):
            terminals.append((h, TerminalKind.BASIC))
            continue
        if is_doublet(h):
            terminals.append((h, TerminalKind.DOUBLET))
            continue
        children, records = reduce_step(h)
        steps.extend(records)
        stack.extend(reversed(children))
    first = terminals[0]
    return ReductionTrace(tuple(steps), first[0], first[1], tuple(terminals))
