# tests/conftest.py
from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.scalar import Scalar  # noqa: E402

hypothesis_settings.register_profile("default", max_examples=60, deadline=None)
hypothesis_settings.load_profile("default")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, fractions, fractions)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero)
