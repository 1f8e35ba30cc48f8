from app.cli import run

__all__ = ['run']
