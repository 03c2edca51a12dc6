from textwrap import dedent

import pytest


def test_group_fixtures(pytester: pytest.Pytester) -> None:
    pytester.makepyfile(
        dedent(
            """\
            from mereon.pytest.assertions import assert_closed_group
            from mereon.quatgroup import BinaryGroup


            def test_group_fixtures(
                binary_tetrahedral_group: BinaryGroup,
                binary_octahedral_group: BinaryGroup,
                binary_icosahedral_group: BinaryGroup,
            ) -> None:
                assert [len(binary_tetrahedral_group), len(binary_octahedral_group), len(binary_icosahedral_group)] == [
                    24,
                    48,
                    120,
                ]
                assert_closed_group(binary_tetrahedral_group)
            """
        )
    )

    result = pytester.runpytest_subprocess()
    result.assert_outcomes(passed=1)


def test_polyhedron_fixtures(pytester: pytest.Pytester) -> None:
    pytester.makepyfile(
        dedent(
            """\
            from mereon.polytopes import Polyhedron
            from mereon.pytest.assertions import assert_manifold, assert_mesh_counts


            def test_polyhedron_fixtures(m144p: Polyhedron, m120p: Polyhedron, disdyakis: Polyhedron) -> None:
                assert_mesh_counts(m144p, 74, 216, 144)
                assert_mesh_counts(m120p, 62, 180, 120)
                assert_mesh_counts(disdyakis, 62, 180, 120)
                assert_manifold(m120p)
            """
        )
    )

    result = pytester.runpytest_subprocess()
    result.assert_outcomes(passed=1)


def test_mckay_seed_set_from_envvar(pytester: pytest.Pytester) -> None:
    pytester.makeconftest(
        dedent(
            """\
            import os


            os.environ["MEREON_SEED"] = "7"
            """
        )
    )

    pytester.makepyfile(
        dedent(
            """\
            from typing import Dict

            from mereon.mckay import McKayGraph


            def test_mckay_seed_set_from_envvar(mckay_seed: int, mckay_graphs: Dict[str, McKayGraph]) -> None:
                assert mckay_seed == 7
                assert sorted(mckay_graphs) == ["2I", "2O", "2T"]
                assert mckay_graphs["2I"].label.value == "Ê8"
            """
        )
    )

    result = pytester.runpytest_subprocess()
    result.assert_outcomes(passed=1)
