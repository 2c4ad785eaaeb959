import json
import threading
import urllib.error
import urllib.request

import pytest

from braidquiver.cli import main
from braidquiver.ops import encode
from braidquiver.service import serve

A3_JSON = '{"vertices":[1,2,3],"arrows":[[1,2],[2,3]]}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_mutate(capsys):
    code, out, _ = run_cli(capsys, "mutate", "--quiver", A3_JSON, "--vertex", "2")
    assert code == 0
    assert json.loads(out) == {
        "quiver": {"vertices": [1, 2, 3], "arrows": [[1, 3], [2, 1], [3, 2]]}
    }


def test_cli_wordeq(capsys):
    code, out, _ = run_cli(
        capsys, "wordeq", "--type", "A2", "--w1", "s1 s2 s1", "--w2", "s2 s1 s2"
    )
    assert code == 0
    assert json.loads(out) == {"equal": True, "normal_form_trivial": True}


def test_cli_wordeq_through_quiver(capsys):
    cycle = '{"vertices":[1,2,3],"arrows":[[1,2],[2,3],[3,1]]}'
    code, out, _ = run_cli(
        capsys,
        "wordeq",
        "--quiver",
        cycle,
        "--w1",
        "s1 s2 s3 s1",
        "--w2",
        "s2 s3 s1 s2",
    )
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_cli_bad_input(capsys):
    code, _, err = run_cli(capsys, "mutate", "--quiver", "oops", "--vertex", "1")
    assert code == 2
    assert "error:" in err
    code, _, err = run_cli(capsys, "mutate", "--quiver", A3_JSON, "--vertex", "9")
    assert code == 2


def test_cli_class_and_present(capsys):
    code, out, _ = run_cli(capsys, "class", "--quiver", A3_JSON)
    assert code == 0
    assert json.loads(out)["count"] == 4
    code, out, _ = run_cli(capsys, "present", "--quiver", A3_JSON, "--format", "text")
    assert code == 0
    assert "braid" in out and "commuting" in out


def test_cli_surface_and_qp(capsys):
    code, out, _ = run_cli(capsys, "surface", "initial", "--type", "A2")
    tri = json.loads(out)["triangulation"]
    code, out, _ = run_cli(
        capsys, "surface", "quiver", "--triangulation", json.dumps(tri)
    )
    assert code == 0
    assert json.loads(out)["quiver"]["arrows"] == [[2, 1]]
    code, out, _ = run_cli(capsys, "surface", "enumerate", "--type", "A2")
    assert json.loads(out)["count"] == 5
    qp_json = json.dumps(
        {
            "vertices": [1, 2, 3],
            "arrows": [["a", 1, 2], ["b", 2, 3]],
            "potential": {"terms": []},
        }
    )
    code, out, _ = run_cli(capsys, "qp", "mutate", "--qp", qp_json, "--vertex", "2")
    assert code == 0
    data = json.loads(out)["qp"]
    assert sorted(tuple(a[1:]) for a in data["arrows"]) == [(1, 3), (2, 1), (3, 2)]
    assert len(data["potential"]["terms"]) == 1
    code, out, _ = run_cli(capsys, "qp", "check", "--qp", json.dumps(data))
    assert code == 0 and json.loads(out)["canonical"] is True


def test_cli_k0(capsys):
    code, out, _ = run_cli(capsys, "k0", "verify", "--quiver", A3_JSON)
    assert code == 0
    assert json.loads(out) == {"relators_checked": 3, "failures": []}


def test_cli_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--max-rank", "3", "--format", "json")
    assert code == 0
    results = json.loads(out)["results"]
    assert len(results) == 9
    assert all(r["ok"] for r in results)


@pytest.fixture(scope="module")
def server():
    srv = serve(0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv.server_address[1]
    srv.shutdown()
    srv.server_close()


def post(port, path, body):
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}",
        data=json.dumps(body).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, resp.read().decode()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read().decode()


def test_service_health(server):
    with urllib.request.urlopen(f"http://127.0.0.1:{server}/api/health") as resp:
        assert resp.status == 200
        assert json.loads(resp.read()) == {"status": "ok"}


def test_service_endpoints(server):
    status, body = post(
        server, "/api/mutate", {"quiver": json.loads(A3_JSON), "vertex": 2}
    )
    assert status == 200
    assert json.loads(body)["quiver"]["arrows"] == [[1, 3], [2, 1], [3, 2]]
    status, body = post(
        server, "/api/wordeq", {"type": "A2", "w1": "s1 s2 s1", "w2": "s2 s1 s2"}
    )
    assert status == 200
    assert json.loads(body) == {"equal": True, "normal_form_trivial": True}


def test_service_errors(server):
    status, body = post(server, "/api/mutate", {"vertex": 1})
    assert status == 400
    status, body = post(
        server, "/api/mutate", {"quiver": json.loads(A3_JSON), "vertex": 9}
    )
    assert status == 422
    assert "error" in json.loads(body)
    status, _ = post(server, "/api/nope", {})
    assert status == 404


def test_service_concurrent_requests(server):
    import concurrent.futures

    body = {"quiver": json.loads(A3_JSON), "vertex": 2}
    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: post(server, "/api/mutate", body), range(32)))
    assert all(status == 200 for status, _ in results)
    assert len({payload for _, payload in results}) == 1


def test_service_statelessness_and_cli_parity(server, capsys):
    body = {"quiver": json.loads(A3_JSON), "vertex": 2}
    first = post(server, "/api/mutate", body)
    post(server, "/api/wordeq", {"type": "A2", "w1": "s1", "w2": "s2"})
    second = post(server, "/api/mutate", body)
    assert first == second
    code, out, _ = run_cli(capsys, "mutate", "--quiver", A3_JSON, "--vertex", "2")
    assert out.strip() == first[1]
