from planarc5.api.service import app

__all__ = ["app"]
