"""Certificate values and their text format.

A certificate file looks like::

    certificate k=2 fallback=0
    a a > _z0
    ...
    isolated _z0 _z1
    derivation
      EdgeSplit edge=a-b hole=a,b,c,d
        Compose cut=a,b prey=_z1
          ...

The digraph section uses the digraph text format.  The derivation tree is
one node per line, indented two spaces per level, as ``Kind key=value ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .graph import Digraph, Graph, parse_digraph, serialize_digraph

NODE_KINDS = ("Chordal", "EdgeSplit", "CutSplit", "ExactFallback", "Compose")


@dataclass
class DerivationNode:
    kind: str
    data: dict = field(default_factory=dict)
    pieces: list = field(default_factory=list)

    def walk(self):
        yield self
        for p in self.pieces:
            yield from p.walk()

    def render(self, depth: int = 1) -> list[str]:
        head = "  " * depth + self.kind
        items = " ".join(f"{k}={v}" for k, v in self.data.items())
        lines = [head + (" " + items if items else "")]
        for p in self.pieces:
            lines.extend(p.render(depth + 1))
        return lines


@dataclass
class Certificate:
    """Acyclic digraph witnessing that ``target`` plus ``k`` isolated
    vertices is a competition graph."""

    target: Optional[Graph]
    k: int
    digraph: Digraph
    isolated: tuple
    derivation: Optional[DerivationNode] = None
    fallback_used: bool = False


def render_certificate(cert: Certificate) -> str:
    lines = [f"certificate k={cert.k} fallback={int(cert.fallback_used)}"]
    text = serialize_digraph(cert.digraph)
    body = text.splitlines()
    lines.extend(body)
    lines.append(" ".join(["isolated"] + sorted(cert.isolated)))
    if cert.derivation is not None:
        lines.append("derivation")
        lines.extend(cert.derivation.render())
    return "".join(line + "\n" for line in lines)


def parse_certificate(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty certificate", 1)
    head = lines[0].split()
    try:
        if head[0] != "certificate" or len(head) != 3:
            raise ValueError
        k = int(head[1].removeprefix("k="))
        fallback = head[2].removeprefix("fallback=")
        if fallback not in ("0", "1") or not head[1].startswith("k="):
            raise ValueError
    except (ValueError, IndexError):
        raise ParseError("malformed certificate header", 1) from None
    iso_at = None
    for i, line in enumerate(lines[1:], 2):
        if line.split()[:1] == ["isolated"]:
            iso_at = i
            break
    if iso_at is None:
        raise ParseError("missing isolated line", len(lines))
    digraph = parse_digraph("\n".join(lines[1:iso_at - 1]))
    isolated = tuple(lines[iso_at - 1].split()[1:])
    derivation = None
    rest = lines[iso_at:]
    if rest:
        if rest[0].strip() != "derivation":
            raise ParseError("expected derivation section", iso_at + 1)
        derivation = _parse_tree(rest[1:], iso_at + 2)
    return Certificate(
        target=None,
        k=k,
        digraph=digraph.union(Digraph(isolated)),
        isolated=isolated,
        derivation=derivation,
        fallback_used=fallback == "1",
    )


def _parse_tree(lines: list[str], first_lineno: int) -> Optional[DerivationNode]:
    root = None
    stack: list[tuple[int, DerivationNode]] = []
    for offset, line in enumerate(lines):
        if not line.strip():
            continue
        lineno = first_lineno + offset
        indent = len(line) - len(line.lstrip(" "))
        if indent % 2 or indent == 0:
            raise ParseError("bad derivation indentation", lineno)
        depth = indent // 2
        parts = line.split()
        if parts[0] not in NODE_KINDS:
            raise ParseError(f"unknown derivation node {parts[0]!r}", lineno)
        data = {}
        for item in parts[1:]:
            key, sep, value = item.partition("=")
            if not sep:
                raise ParseError(f"malformed node field {item!r}", lineno)
            data[key] = value
        node = DerivationNode(parts[0], data)
        while stack and stack[-1][0] >= depth:
            stack.pop()
        if not stack:
            if root is not None or depth != 1:
                raise ParseError("derivation must have a single root", lineno)
            root = node
        else:
            if depth != stack[-1][0] + 1:
                raise ParseError("bad derivation nesting", lineno)
            stack[-1][1].pieces.append(node)
        stack.append((depth, node))
    return root
