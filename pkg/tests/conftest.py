import pytest

from symdyn import full_shift, make_alphabet, sft, substitution
from symdyn.blockcode import identity_code, permutation_code, shift_code

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def binary():
    return make_alphabet(["0", "1"])


@pytest.fixture(scope="session")
def full2(binary):
    return full_shift(binary, "full2")


@pytest.fixture(scope="session")
def golden(binary):
    return sft(binary, ["11"], "golden")


@pytest.fixture(scope="session")
def fib(binary):
    return substitution(binary, {"0": "01", "1": "0"}, "fib")


@pytest.fixture(scope="session")
def thue_morse(binary):
    return substitution(binary, {"0": "01", "1": "10"}, "thue_morse")


@pytest.fixture(scope="session")
def flip(binary):
    return permutation_code(binary, {"0": "1", "1": "0"}, "flip")


@pytest.fixture(scope="session")
def ident(binary):
    return identity_code(binary)


@pytest.fixture(scope="session")
def shift(binary):
    return lambda k: shift_code(binary, k)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _ACCEPTANCE:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
