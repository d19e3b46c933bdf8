"""Writers for reproducibility dumps."""

from pathlib import Path

from src.models.graph import SparseAdjacency


def format_edge_list(a: SparseAdjacency) -> str:
    """Sorted edge list with a header recording node count and direction."""
    lines = [f"# n_nodes={a.n_nodes} directed={'true' if a.directed else 'false'}"]
    lines.extend(f"{i}\t{j}" for i, j in a.edge_list())
    return "\n".join(lines) + "\n"


def write_edge_list(a: SparseAdjacency, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(format_edge_list(a), encoding="utf-8")
    return path
