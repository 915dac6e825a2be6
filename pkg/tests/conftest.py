import pytest

import hypsolid as H


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    # the acceptance module prints its own PASS lines; announce failures too
    if report.when == "call" and report.failed and item.fspath.basename == "test_acceptance.py":
        print(f"\nFAIL [{item.name}]")


@pytest.fixture(scope="session")
def sig2():
    return H.parse_signature("f 2")


@pytest.fixture(scope="session")
def sig22():
    return H.parse_signature("f 2\ng 2")


@pytest.fixture(scope="session")
def sig3():
    return H.parse_signature("f 3")


@pytest.fixture(scope="session")
def hyps_depth1(sig2):
    return H.enumerate_hypersubstitutions(sig2, 1)


@pytest.fixture(scope="session")
def presentations():
    texts = {
        "TR": "x = y",
        "Z": "x1x2 = x3x4",
        "bands": "xx = x",
        "commutative": "xy = yx",
        "left_zero": "xy = x",
        "cyclic": "xyz = zxy",
        "three": "x1x2x3 = y1y2y3",
        "empty": "",
    }
    return {name: H.parse_presentation(text) for name, text in texts.items()}


@pytest.fixture(scope="session")
def mixed_universe(sig2):
    """A practical stand-in for the depth-<=4 universe: complete up to
    depth 4 over one variable, depth 3 over two, depth 2 over three."""
    seen = []
    have = set()
    for depth, nvars in ((4, 1), (3, 2), (2, 3)):
        for t in H.enumerate_terms(sig2, depth, nvars):
            if t not in have:
                have.add(t)
                seen.append(t)
    return seen
