import os

MEMO_ENV = "COVERIDEAL_MEMO_LIMIT"
DEFAULT_LIMIT = 1_000_000


def memo_limit() -> int:
    raw = os.environ.get(MEMO_ENV)
    if raw is None:
        return DEFAULT_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"{MEMO_ENV} must be an integer, got {raw!r}") from None
    if limit < 0:
        raise ValueError(f"{MEMO_ENV} must be non-negative")
    return limit


class Memo(dict):
    """Per-call memo table keyed by kept vertex set.

    Once ``limit`` entries are stored, further results are computed but not
    cached.  Each top-level call owns its table, so concurrent calls never
    share one.
    """

    def __init__(self, limit: int | None = None):
        super().__init__()
        self.limit = memo_limit() if limit is None else limit

    def store(self, key, value):
        if len(self) < self.limit:
            self[key] = value
        return value
