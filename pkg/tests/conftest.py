import json
from pathlib import Path

from hypothesis import strategies as st

from rimhook import enumerate_partitions

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str):
    return json.loads((FIXTURES / name).read_text())


def partitions_of(n: int):
    return st.sampled_from(list(enumerate_partitions(n)))


# Any partition of weight 0..8, weights equally likely.
partitions = st.integers(min_value=0, max_value=8).flatmap(partitions_of)
nonempty_partitions = st.integers(min_value=1, max_value=8).flatmap(partitions_of)
