from .reports import RunReport, RunRow
from .store import read_graphs, write_graphs

__all__ = ["RunReport", "RunRow", "read_graphs", "write_graphs"]
