"""
Module providing a base runner class for the calculations exposed by the pipeline.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from qed_vacuum.components.database import Database
from qed_vacuum.config import BaseSettingsQED

T = TypeVar("T")
R = TypeVar("R")


class BaseRunner:
    def __init__(self, config: BaseSettingsQED, database: Database):
        self.config = config
        self.database = database

    @staticmethod
    def ordered_map(func: Callable[[T], R], values: Iterable[T], num_workers: int = 1) -> list[R]:
        """Evaluates `func` on every value, results follow the input order whatever the number of workers."""
        if num_workers <= 1:
            return [func(value) for value in values]
        with ThreadPoolExecutor(max_workers=num_workers) as executor:
            return list(executor.map(func, values))
