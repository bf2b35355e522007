"""Reading and writing edge-list text.

The on-disk format is a comma-separated edge list, one arc per line:

    tail,head,efficiency[,mode]

where mode is ``dir`` (default) or ``undir``.  An optional header line is
recognized by its third field not being a number.  Blank lines are
skipped; both LF and CRLF endings work.  Parse failures carry 1-based
line numbers.
"""

from pathlib import Path

from .algebra import check_efficiency
from .errors import ConflictingArc, DuplicateArc, ParseError, SelfLoop
from .network import Network, RawArc, build_network, validate_label


def parse_network(text: str) -> Network:
    """Parse edge-list text into a validated Network."""
    raws: list[RawArc] = []
    directed_seen: dict[tuple[str, str], int] = {}
    undirected_seen: dict[tuple[str, str], int] = {}
    saw_data = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) not in (3, 4):
            raise ParseError(
                f"expected 3 or 4 comma-separated fields, got {len(fields)}",
                line=lineno,
            )
        if not saw_data:
            saw_data = True
            if not _is_number(fields[2]):
                continue  # header line
        tail, head = fields[0], fields[1]
        validate_label(tail, line=lineno)
        validate_label(head, line=lineno)
        if tail == head:
            raise SelfLoop(
                f"self-loop on node {tail!r}", line=lineno, pair=(tail, head)
            )
        try:
            eta = float(fields[2])
        except ValueError:
            raise ParseError(
                f"efficiency {fields[2]!r} is not a number", line=lineno
            ) from None
        check_efficiency(eta, line=lineno, pair=(tail, head))
        undir = False
        if len(fields) == 4:
            mode = fields[3]
            if mode == "undir":
                undir = True
            elif mode != "dir":
                raise ParseError(
                    f"mode must be 'dir' or 'undir', got {mode!r}", line=lineno
                )
        unordered = (tail, head) if tail < head else (head, tail)
        if undir:
            if unordered in undirected_seen:
                raise DuplicateArc(
                    f"undirected link {unordered[0]!r} -- {unordered[1]!r} "
                    f"already declared on line {undirected_seen[unordered]}",
                    line=lineno,
                    pair=unordered,
                )
            if unordered in directed_seen or (head, tail) in directed_seen:
                raise ConflictingArc(
                    f"pair {unordered[0]!r} -- {unordered[1]!r} already has a "
                    "directed arc",
                    line=lineno,
                    pair=unordered,
                )
            undirected_seen[unordered] = lineno
        else:
            if (tail, head) in directed_seen:
                raise DuplicateArc(
                    f"arc {tail!r} -> {head!r} already declared on line "
                    f"{directed_seen[(tail, head)]}",
                    line=lineno,
                    pair=(tail, head),
                )
            if unordered in undirected_seen:
                raise ConflictingArc(
                    f"pair {unordered[0]!r} -- {unordered[1]!r} already has an "
                    "undirected link",
                    line=lineno,
                    pair=(tail, head),
                )
            directed_seen[(tail, head)] = lineno
        raws.append((tail, head, eta, undir))
    return build_network(raws)


def _is_number(field: str) -> bool:
    try:
        float(field)
    except ValueError:
        return False
    return True


def read_network(path: str | Path) -> Network:
    """Read and parse an edge-list file."""
    return parse_network(Path(path).read_text(encoding="utf-8"))


def render_network(net: Network) -> str:
    """Serialize a network back to edge-list text.

    Efficiencies are written with repr, which round-trips floats exactly:
    parse_network(render_network(net)) == net.
    """
    lines = ["tail,head,efficiency,mode"]
    for arc in net.arcs:
        mode = "undir" if arc.undirected else "dir"
        lines.append(f"{arc.tail},{arc.head},{arc.efficiency!r},{mode}")
    return "\n".join(lines) + "\n"


def to_dot(net: Network) -> str:
    """Render the network in DOT, for quick visual inspection.

    Undirected links are drawn without an arrowhead.
    """
    lines = ["digraph network {"]
    for node in net.nodes:
        lines.append(f'  "{node}";')
    for arc in net.arcs:
        attrs = f'label="{arc.efficiency}"'
        if arc.undirected:
            attrs += ", dir=none"
        lines.append(f'  "{arc.tail}" -> "{arc.head}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
