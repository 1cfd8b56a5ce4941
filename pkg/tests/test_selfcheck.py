from gallai import GENERATOR_ID
from gallai.selfcheck import run_selfcheck


def test_selfcheck_passes_and_reports():
    lines = []
    assert run_selfcheck(emit=lines.append)
    assert all(line.startswith(("[PASS]", "[FAIL]", "generator:", "12/")) for line in lines)
    assert not any(line.startswith("[FAIL]") for line in lines)
    assert any(GENERATOR_ID in line for line in lines)
