import pytest

from coverhom import assemble_witness_free, build_cover, quotient_from_bundle


@pytest.fixture(scope="session")
def sorted_witness_bundle():
    return assemble_witness_free(3, 2, 1, "sorted")


@pytest.fixture(scope="session")
def sorted_witness_cover(sorted_witness_bundle):
    return build_cover(quotient_from_bundle(sorted_witness_bundle))
