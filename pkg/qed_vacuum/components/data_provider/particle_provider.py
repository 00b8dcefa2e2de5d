"""
Provides helper function to load particle tables
"""
import logging
from pathlib import Path

import polars as pl
from pydantic import ValidationError

from qed_vacuum.components.errors import ParticleTableError
from qed_vacuum.components.particles import Particle, ParticleSet

logger = logging.getLogger(__name__)

PARTICLE_TABLE_COLUMNS = ["name", "charge_ratio", "mass_kg", "degeneracy", "kind"]


def load_particles(path: Path | str, label: str | None = None, separator: str = ",") -> ParticleSet:
    """
    Loads a particle table into a validated `ParticleSet`, keeping the file order.

    Args:
        path: UTF-8 delimited file with header `name, charge_ratio, mass_kg, degeneracy, kind`
        label: label of the set, defaults to the file stem
        separator: column separator

    Returns:
        a `ParticleSet`; an empty file gives an empty set
    """
    path = Path(path)
    label = label or path.stem
    logger.info("Loading particle set `%s` from %s", label, path)

    try:
        if not path.read_text(encoding="utf-8").strip():
            logger.warning("Particle table %s is empty", path)
            return ParticleSet(particles=(), label=label)
        df = pl.read_csv(path, separator=separator, infer_schema=False)
    except (OSError, pl.exceptions.PolarsError) as e:
        raise ParticleTableError(f"Cannot read particle table {path}") from e

    df = df.rename({column: column.strip() for column in df.columns})
    missing = [column for column in PARTICLE_TABLE_COLUMNS if column not in df.columns]
    if missing:
        raise ParticleTableError(f"{path}: missing columns {missing}. Available columns: {df.columns}")

    particles = []
    seen = set()
    # Row numbers are 1-based and count the header as row 1
    for row_number, row in enumerate(df.select(PARTICLE_TABLE_COLUMNS).iter_rows(named=True), start=2):
        name = (row["name"] or "").strip()
        if name in seen:
            raise ParticleTableError(f"{path}: row {row_number} (`{name}`): duplicate particle name")
        try:
            particles.append(Particle(name=name,
                                      charge_ratio=(row["charge_ratio"] or "").strip(),
                                      mass=(row["mass_kg"] or "").strip(),
                                      degeneracy=(row["degeneracy"] or "").strip(),
                                      kind=(row["kind"] or "").strip().lower()))
        except ValidationError as e:
            raise ParticleTableError(f"{path}: row {row_number} (`{name}`): {e}") from e
        seen.add(name)

    logger.info("Loaded %i particles for set `%s`", len(particles), label)
    return ParticleSet(particles=tuple(particles), label=label)
