"""Markdown structure trees.

The grammar is deliberately small and total: any string parses.  Labels
come from a closed 9-element set.  Headings nest among themselves by
level; every other block attaches to the root, and unrecognized lines
fall back to paragraph content so malformed model output still yields a
tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

LABELS = frozenset(
    ["root", "heading1", "heading2", "heading3", "paragraph", "list", "list_item", "table", "formula"]
)


@dataclass
class TreeNode:
    label: str
    children: list = field(default_factory=list)

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValueError(f"unknown node label {self.label!r}")

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def labels_preorder(self) -> list:
        out = [self.label]
        for c in self.children:
            out.extend(c.labels_preorder())
        return out

    def pretty(self, depth: int = 0) -> str:
        lines = ["  " * depth + self.label]
        for c in self.children:
            lines.append(c.pretty(depth + 1))
        return "\n".join(lines)


def _heading_level(line: str) -> int:
    """1..3 for recognized headings, 0 otherwise."""
    for level, prefix in ((3, "### "), (2, "## "), (1, "# ")):
        if line.startswith(prefix) or line == prefix.strip():
            return level
    return 0


def parse_structure_tree(markdown: str) -> TreeNode:
    """Parse markdown into an ordered labeled tree.  Total function."""
    root = TreeNode("root")
    # innermost open headings, shallowest first
    heading_stack: list = []
    lines = markdown.split("\n")
    i = 0
    n = len(lines)
    while i < n:
        line = lines[i].rstrip()
        if not line.strip():
            i += 1
            continue
        level = _heading_level(line)
        if level:
            node = TreeNode(f"heading{level}")
            while heading_stack and heading_stack[-1][0] >= level:
                heading_stack.pop()
            parent = heading_stack[-1][1] if heading_stack else root
            parent.children.append(node)
            heading_stack.append((level, node))
            i += 1
        elif line.startswith("- "):
            node = TreeNode("list")
            while i < n and lines[i].rstrip().startswith("- "):
                node.children.append(TreeNode("list_item"))
                i += 1
            root.children.append(node)
        elif line.startswith("|"):
            while i < n and lines[i].rstrip().startswith("|"):
                i += 1
            root.children.append(TreeNode("table"))
        elif line.startswith("```"):
            i += 1
            while i < n and not lines[i].rstrip().startswith("```"):
                i += 1
            i += 1  # closing fence (or end of input)
            root.children.append(TreeNode("table"))
        elif line.startswith("$$"):
            # single-line "$$ ... $$" or a paired-fence block
            if not (len(line) > 2 and line.endswith("$$")):
                i += 1
                while i < n and not lines[i].rstrip().endswith("$$"):
                    i += 1
            i += 1
            root.children.append(TreeNode("formula"))
        else:
            # consecutive plain lines form one paragraph
            while i < n:
                cur = lines[i].rstrip()
                if not cur.strip() or _heading_level(cur) or cur.startswith(("- ", "|", "```", "$$")):
                    break
                i += 1
            root.children.append(TreeNode("paragraph"))
    return root


def tree_size(markdown: str) -> int:
    return parse_structure_tree(markdown).size()
