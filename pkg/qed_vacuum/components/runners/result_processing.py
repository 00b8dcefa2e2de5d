"""
Module providing the output envelope of every command and its JSON, CSV and table renderings.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

import orjson
import polars as pl
from pydantic import BaseModel, Field

from qed_vacuum.config import OutputFormat


class OutputEnvelope(BaseModel):
    command: str = Field(description="Subcommand that produced the results")
    inputs_echo: dict[str, Any] = Field(description="All resolved inputs, SI units, enough to reproduce the output")
    results: list[dict[str, Any]] = Field(description="One flat record per result row")
    warnings: list[str] = Field(default_factory=list, description="Degenerate or non-default paths taken")

    def to_json(self) -> str:
        return orjson.dumps(self.model_dump(mode="json"),
                            option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode("utf-8")

    def to_dataframe(self) -> pl.DataFrame:
        return pl.DataFrame(self.results)

    def to_csv(self) -> str:
        """Results only, one line per row, plot-ready."""
        return self.to_dataframe().write_csv()

    def to_table(self) -> str:
        lines = [f"# command: {self.command}"]
        lines.extend(f"# {key}: {value}" for key, value in self.inputs_echo.items())
        with pl.Config(tbl_rows=-1,
                       tbl_cols=-1,
                       fmt_str_lengths=120,
                       fmt_float="full",
                       tbl_hide_dataframe_shape=True,
                       tbl_hide_column_data_types=True):
            lines.append(str(self.to_dataframe()))
        lines.extend(f"# warning: {warning}" for warning in self.warnings)
        return "\n".join(lines) + "\n"

    def render(self, output_format: OutputFormat) -> str:
        match OutputFormat(output_format):
            case OutputFormat.JSON:
                return self.to_json() + "\n"
            case OutputFormat.CSV:
                return self.to_csv()
            case OutputFormat.TABLE:
                return self.to_table()
        raise ValueError(f"Unknown output format {output_format}")

    @staticmethod
    def save_as_json(envelope: OutputEnvelope, file_name: Path | str) -> Path:
        path = Path(file_name)
        path.write_text(envelope.to_json(), encoding="utf-8")
        return path

    @staticmethod
    def save_as_csv(envelope: OutputEnvelope, file_name: Path | str) -> Path:
        path = Path(file_name)
        envelope.to_dataframe().write_csv(path, separator="\t" if path.suffix == ".tsv" else ",")
        return path
