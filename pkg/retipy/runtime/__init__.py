from .pipeline import Pipeline
from .session import RuntimeConfig, Session, configure, get_session, parallel_map

__all__ = ["Pipeline", "RuntimeConfig", "Session", "configure", "get_session", "parallel_map"]
