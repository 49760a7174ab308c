import json
import threading
import urllib.request

import pytest

from coxmut import Diagram, generate_presentation
from coxmut.presentation import RulesetError
from coxmut.standards import exceptional_x6, finite_a
from coxmut.service import make_server


def test_auto_ruleset_finite():
    pres = generate_presentation(finite_a(3), "auto")
    assert pres.ruleset == "finite-affine"


def test_auto_ruleset_exceptional():
    pres = generate_presentation(exceptional_x6(), "auto")
    assert pres.ruleset == "exceptional"
    assert len(pres.by_kind("R5*")) == 2


def test_auto_ruleset_refuses_mutation_infinite():
    wild = Diagram.from_arrows(4, [(1, 2, 1), (2, 3, 4), (3, 4, 1)])
    with pytest.raises(RulesetError):
        generate_presentation(wild, "auto")


def test_cli_verify_finite_quotient_backend(tmp_path, capsys):
    from coxmut.cli import main

    path = tmp_path / "x6.json"
    path.write_text(exceptional_x6().to_json())
    code = main([
        "verify", str(path), "--ruleset", "exceptional",
        "--backend", "finite-quotient", "--degree", "3",
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["backend"] == "finite-quotient" and data["ok"]


def test_service_serializes_concurrent_mutations():
    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{port}"
    try:
        payload = json.dumps(
            {"diagram": finite_a(3).to_json_dict()}
        ).encode()
        req = urllib.request.Request(
            f"{base}/session", data=payload, headers={"Content-Type": "application/json"}
        )
        with urllib.request.urlopen(req) as resp:
            sid = json.loads(resp.read())["id"]

        def hammer():
            body = json.dumps({"vertex": 2}).encode()
            r = urllib.request.Request(
                f"{base}/session/{sid}/mutate",
                data=body,
                headers={"Content-Type": "application/json"},
            )
            with urllib.request.urlopen(r):
                pass

        workers = [threading.Thread(target=hammer) for _ in range(8)]
        for w in workers:
            w.start()
        for w in workers:
            w.join()
        with urllib.request.urlopen(f"{base}/session/{sid}/state") as resp:
            state = json.loads(resp.read())
        # every mutation was serialized and recorded; mu_2 is an involution,
        # so an even count returns to the seed diagram
        assert state["history"] == [2] * 8
        assert Diagram.from_json_dict(state["diagram"]) == finite_a(3)
    finally:
        server.shutdown()
