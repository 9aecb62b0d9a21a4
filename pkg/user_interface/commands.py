"""
Module defines the four command line commands. Each returns an exit
status: 0 when every internal check passed, 1 otherwise. Toolkit errors
are reported as "error: <message>" on stderr.
"""
# == Standard Library imports ==
import logging
import statistics
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

# == Local imports ==
from arithmetic import OpLedger, load_profile
from processor import (ForwardSecureHibe, FsKeyBundle, HibeKey, KemCiphertext,
                       MasterSecret, ParamsBundle, SchemeId, UserKey,
                       get_scheme, kem_decrypt, kem_encrypt)
from scorecard import opcount_verify
from utils.errors import IbeToolkitError, PkgAbort
from utils.serialization import armor, dearmor, dumps, loads
from .report import bench_frame, bench_rows, build_table, frame_to_csv, \
    frame_to_text
from .run_config import ReportSpec, RunConfig
from .transcript import Transcript

logger = logging.getLogger(__name__)

DEMO_IDENTITY = "alice@example.com"
DEMO_PATH = ("example.com", "alice", "laptop", "inbox", "archive")
DEMO_TEXT = b"identity-based encryption demo message"
DEMO_PAYLOAD = b"a payload of any length, masked with the session key"
SETUP_RETRIES = 8
STALE_CHECK_MIN_ORDER = 2 ** 16

HIERARCHICAL = (SchemeId.OUR_HIBE.value, SchemeId.FS_HIBE.value)


@dataclass
class Roundtrip:
    """
    Dataclass for the outcome of one setup/extract/encrypt/decrypt run.
    """
    ok: bool
    ledger: OpLedger
    timings: dict[str, float] = field(default_factory=dict)


def report_error(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return 1


def _identity_for(scheme: str, depth: int) -> Any:
    if scheme == SchemeId.OUR_HIBE.value:
        return tuple(DEMO_PATH[:depth]) + tuple(
            f"level{i}" for i in range(len(DEMO_PATH), depth))
    if scheme == SchemeId.FS_HIBE.value:
        return DEMO_PATH[:1]
    return DEMO_IDENTITY


def _options(scheme: str, config: RunConfig) -> dict[str, int]:
    if scheme == SchemeId.OUR_HIBE.value:
        return {"depth": config.depth}
    if scheme == SchemeId.FS_HIBE.value:
        return {"depth": config.depth, "periods_log": config.periods_log}
    return {}


def _message(impl, params: ParamsBundle, rng):
    if impl.message_domain == "gt":
        return impl.random_message(params, rng)
    return DEMO_TEXT.ljust(params.msg_bytes, b".")[:params.msg_bytes]


def _timed(timings: dict[str, float], phase: str, fn, *args, **kwargs):
    start = time.perf_counter()
    try:
        return fn(*args, **kwargs)
    finally:
        timings[phase] = (time.perf_counter() - start) * 1000.0


def setup_and_extract(impl, curve, rng, identity, options: dict[str, int],
                      timings: dict[str, float], ledger: OpLedger,
                      master_extract: bool = False):
    """
    Function runs Setup and the first Extract, re-running Setup on the next
    derived seed when the PKG has to abort for this identity.
    :return: (params, key).
    :raises PkgAbort: Every attempt aborted.
    """
    for attempt in range(SETUP_RETRIES):
        attempt_rng = rng.fork(f"setup-{attempt}")
        params, msk = _timed(timings, "Setup", impl.setup, curve, attempt_rng,
                             **options)
        try:
            key = _timed(timings, "Extract", _extract, impl, params, msk,
                         identity, attempt_rng.fork("key"), master_extract)
        except PkgAbort as exc:
            logger.info("%s; setup attempt %d discarded", exc, attempt)
            ledger.reset()
            continue
        return params, key
    raise PkgAbort(f"{impl.scheme_id}: no usable setup after "
                   f"{SETUP_RETRIES} attempts")


def run_roundtrip(scheme: str, curve, config: RunConfig, rng,
                  master_extract: bool = False) -> Roundtrip:
    """
    Function runs the four phases of one scheme on its demo identity under
    a fresh ledger. Hierarchical keys are delegated level by level unless
    ``master_extract`` asks for one extraction from the master secret.
    """
    impl = get_scheme(scheme)
    identity = _identity_for(scheme, config.depth)
    ledger, timings = OpLedger(), {}
    with ledger:
        params, key = setup_and_extract(impl, curve, rng, identity,
                                        _options(scheme, config), timings,
                                        ledger, master_extract)
        if config.kem:
            sent = DEMO_PAYLOAD
            ciphertext = _timed(timings, "Encrypt", kem_encrypt, scheme, params,
                                identity, sent, rng.fork("encrypt"))
            received = _timed(timings, "Decrypt", kem_decrypt, scheme, params,
                              key, ciphertext)
        else:
            sent = _message(impl, params, rng.fork("message"))
            ciphertext = _timed(timings, "Encrypt", impl.encrypt, params,
                                identity, sent, rng.fork("encrypt"))
            received = _timed(timings, "Decrypt", impl.decrypt, params, key,
                              ciphertext)
    ok = received == sent
    if ok and scheme == SchemeId.FS_HIBE.value:
        # kept off the reported ledger
        with OpLedger():
            ok = _fs_next_period(impl, params, key, identity, rng)
    return Roundtrip(ok, ledger, timings)


def _extract(impl, params, msk, identity, rng, master_extract):
    if isinstance(identity, tuple) and not master_extract and \
            not isinstance(impl, ForwardSecureHibe):
        key = impl.extract(params, msk, identity[:1], rng.fork("level1"))
        for level in range(2, len(identity) + 1):
            key = impl.extract(params, key, identity[:level],
                               rng.fork(f"level{level}"))
        return key
    return impl.extract(params, msk, identity, rng)


def _fs_next_period(impl, params, bundle, identity, rng) -> bool:
    """
    Function moves a period-0 bundle to period 1 and checks that the new
    bundle opens period 1 and the old bundle was emptied. Whether the new
    bundle fails on period 0 is only checked when G_T is too large for a
    chance match.
    """
    old_message = _message(impl, params, rng.fork("m0"))
    old = impl.encrypt(params, identity, old_message, rng.fork("c0"), period=0)
    successor = impl.update(params, bundle, rng.fork("update"))
    sent = _message(impl, params, rng.fork("m1"))
    ciphertext = impl.encrypt(params, identity, sent, rng.fork("c1"), period=1)
    ok = impl.decrypt(params, successor, ciphertext) == sent and not bundle.nodes
    if params.curve.r >= STALE_CHECK_MIN_ORDER:
        ok = ok and impl.decrypt(params, successor, old) != old_message
    return ok


def _ledger_line(snapshot) -> str:
    counts = snapshot.top_level()
    if not counts:
        return "-"
    return " ".join(f"{kind}={count}" for kind, count in counts.items())


# == demo ==

def cmd_demo(config: RunConfig, transcript: Transcript | None = None) -> int:
    """
    Function runs every selected scheme end to end ``trials`` times and
    logs the per-phase ledger of the first trial.
    """
    transcript = transcript or Transcript("demo")
    if config.seed_was_drawn:
        transcript.log(f"seed {config.seed} (pass --seed to replay)")
    try:
        curve = load_profile(config.profile, config.data_dir)
    except IbeToolkitError as exc:
        return report_error(exc)
    transcript.log(f"profile {curve.name}: p={curve.p.bit_length()} bits, "
                   f"r={curve.r.bit_length()} bits, k={curve.k}")
    for scheme in config.schemes:
        transcript.update_message(get_scheme(scheme).title)
        passed = 0
        for trial in range(config.trials):
            try:
                result = run_roundtrip(scheme, curve, config,
                                       config.rng(f"{scheme}/{trial}"))
            except IbeToolkitError as exc:
                transcript.fail(f"{scheme} trial {trial}: {exc}")
                continue
            if trial == 0:
                for phase, snap in result.ledger.phases.items():
                    if config.phase in (None, phase):
                        transcript.log(f"  {phase:<8} {_ledger_line(snap)}")
            if result.ok:
                passed += 1
            else:
                transcript.fail(f"{scheme} trial {trial}: roundtrip mismatch")
        status = "OK" if passed == config.trials else "FAILED"
        transcript.log(f"roundtrip {passed}/{config.trials} {status}")
    return 0 if transcript.ok else 1


# == bench ==

def cmd_bench(config: RunConfig, transcript: Transcript | None = None) -> int:
    """
    Function runs the selected schemes ``trials`` times, reports the
    per-phase ledger with wall-clock medians, then checks every phase of
    every trial against the expected op rows.
    """
    transcript = transcript or Transcript("bench", echo=config.fmt == "table")
    if config.seed_was_drawn:
        print(f"seed {config.seed} (pass --seed to replay)", file=sys.stderr)
    try:
        curve = load_profile(config.profile, config.data_dir)
    except IbeToolkitError as exc:
        return report_error(exc)
    rows, reports = [], []
    for scheme in config.schemes:
        total, samples = OpLedger(), {}
        for trial in range(config.trials):
            try:
                result = run_roundtrip(scheme, curve, config,
                                       config.rng(f"{scheme}/{trial}"),
                                       master_extract=True)
            except IbeToolkitError as exc:
                transcript.fail(f"{scheme} trial {trial}: {exc}")
                continue
            if not result.ok:
                transcript.fail(f"{scheme} trial {trial}: roundtrip mismatch")
            total.merge(result.ledger)
            for phase, ms in result.timings.items():
                samples.setdefault(phase, []).append(ms)
            if not config.kem:
                reports.extend(_verify(scheme, result.ledger, config))
        medians = {phase: statistics.median(ms) for phase, ms in samples.items()}
        scheme_rows = bench_rows(scheme, total, config.trials, medians)
        rows.extend(r for r in scheme_rows
                    if config.phase in (None, r["phase"]))
    frame = bench_frame(rows)
    if config.out:
        frame_to_csv(frame, config.out)
    if config.fmt == "csv":
        sys.stdout.write(frame_to_csv(frame))
    else:
        transcript.log(frame_to_text(frame))
    transcript.update_message("op count verification")
    mismatches = [r for r in reports if not r.matches]
    for report in mismatches:
        transcript.fail(report.describe())
    transcript.log(f"{len(reports) - len(mismatches)}/{len(reports)} phases "
                   f"match the expected op rows")
    if mismatches and config.fmt == "csv":
        for report in mismatches:
            print(f"mismatch: {report.describe()}", file=sys.stderr)
    return 0 if transcript.ok else 1


def _verify(scheme: str, ledger: OpLedger, config: RunConfig) -> list:
    if scheme == SchemeId.FS_HIBE.value:
        return []
    level = config.depth if scheme == SchemeId.OUR_HIBE.value else 0
    return [opcount_verify(scheme, phase, snap, level=level,
                           depth=config.depth, data_dir=config.data_dir)
            for phase, snap in ledger.phases.items()]


# == tables ==

def cmd_tables(spec: ReportSpec, transcript: Transcript | None = None) -> int:
    """
    Function renders each requested table with its PASS/FAIL flag.
    """
    transcript = transcript or Transcript("tables", echo=spec.fmt == "table")
    failed = 0
    for name in spec.which:
        try:
            result = build_table(name, spec.data_dir)
        except (IbeToolkitError, FileNotFoundError, ValueError) as exc:
            return report_error(exc)
        if not result.passed:
            failed += 1
        if spec.out:
            Path(spec.out).mkdir(parents=True, exist_ok=True)
            frame_to_csv(result.frame, Path(spec.out) / f"{name}.csv")
        if spec.fmt == "csv":
            sys.stdout.write(f"# {name}: {result.status}\n")
            sys.stdout.write(frame_to_csv(result.frame))
            continue
        transcript.update_message(f"{name}: {result.title}")
        transcript.log(frame_to_text(result.frame))
        detail = f" ({result.detail})" if result.detail else ""
        transcript.log(f"{result.status}{detail}")
    return 0 if failed == 0 else 1


# == keys ==

def write_record(obj: Any, path: Path, curve=None, use_armor: bool = False,
                 label: str = "RECORD") -> None:
    data = dumps(obj, curve)
    path.parent.mkdir(parents=True, exist_ok=True)
    if use_armor:
        path.write_text(armor(data, label), encoding="utf-8")
    else:
        path.write_bytes(data)


def read_record(path: Path) -> Any:
    """
    Function reads a binary or armored record file.
    """
    if not path.exists():
        raise FileNotFoundError(f"Record file not found: {path}")
    data = path.read_bytes()
    if data.lstrip().startswith(b"-----BEGIN"):
        data = dearmor(data.decode("utf-8"))
    return loads(data)


def parse_identity(scheme: str, text: str) -> Any:
    # hierarchical identities are written a/b/c
    if scheme in HIERARCHICAL:
        return tuple(part for part in text.split("/") if part)
    return text


def cmd_keys(action: str, config: RunConfig, paths: dict[str, Path | None],
             identity: str | None = None, use_armor: bool = False,
             transcript: Transcript | None = None) -> int:
    """
    Function runs one key-file action: gen, extract, inspect, encrypt or
    decrypt. ``paths`` holds the file arguments of the action.
    """
    transcript = transcript or Transcript(f"keys {action}")
    try:
        if action == "gen":
            return _keys_gen(config, paths, use_armor, transcript)
        if action == "extract":
            return _keys_extract(config, paths, identity, use_armor, transcript)
        if action == "inspect":
            return _keys_inspect(paths, transcript)
        if action == "encrypt":
            return _keys_encrypt(config, paths, identity, use_armor, transcript)
        if action == "decrypt":
            return _keys_decrypt(paths, transcript)
    except (IbeToolkitError, FileNotFoundError) as exc:
        return report_error(exc)
    return report_error(ValueError(f"unknown keys action {action!r}"))


def _require(paths: dict[str, Path | None], *names: str) -> list[Path]:
    missing = [name for name in names if paths.get(name) is None]
    if missing:
        raise FileNotFoundError(f"missing file arguments: {missing}")
    return [Path(paths[name]) for name in names]


def _keys_gen(config, paths, use_armor, transcript) -> int:
    (out_dir,) = _require(paths, "out")
    scheme = config.schemes[0]
    impl = get_scheme(scheme)
    curve = load_profile(config.profile, config.data_dir)
    params, msk = impl.setup(curve, config.rng("gen"),
                             **_options(scheme, config))
    write_record(params, out_dir / "params.ibk", use_armor=use_armor,
                 label="PARAMS")
    write_record(msk, out_dir / "master.ibk", curve, use_armor, "MASTER")
    transcript.log(f"{scheme}: wrote params.ibk and master.ibk to {out_dir}")
    return 0


def _keys_extract(config, paths, identity, use_armor, transcript) -> int:
    params_path, master_path, out = _require(paths, "params", "master", "out")
    params, msk = read_record(params_path), read_record(master_path)
    if not isinstance(params, ParamsBundle) or \
            not isinstance(msk, (MasterSecret, HibeKey)):
        raise IbeToolkitError("extract needs a params and a master record")
    key = get_scheme(params.scheme).extract(
        params, msk, parse_identity(params.scheme, identity or DEMO_IDENTITY),
        config.rng("extract"))
    write_record(key, out, params.curve, use_armor, "KEY")
    transcript.log(f"{params.scheme}: wrote key for {key.identity!r} to {out}")
    return 0


def _keys_inspect(paths, transcript) -> int:
    (path,) = _require(paths, "file")
    obj = read_record(path)
    transcript.log(f"kind: {type(obj).__name__}")
    transcript.log(f"scheme: {obj.scheme}")
    for name, value in _components(obj).items():
        transcript.log(f"  {name}: {type(value).__name__}")
    if paths.get("params") is None or not isinstance(obj, (UserKey, FsKeyBundle)):
        return 0
    params = read_record(Path(paths["params"]))
    with OpLedger():
        valid = get_scheme(params.scheme).key_is_valid(params, obj)
    transcript.log("key valid" if valid else "key INVALID")
    return 0 if valid else 1


def _components(obj: Any) -> dict[str, Any]:
    for attr in ("public", "secrets", "components", "parts"):
        if hasattr(obj, attr):
            return getattr(obj, attr)
    if isinstance(obj, KemCiphertext):
        return {"body": obj.body, "payload": obj.payload}
    return getattr(obj, "nodes", {})


def _keys_encrypt(config, paths, identity, use_armor, transcript) -> int:
    params_path, in_path, out = _require(paths, "params", "in", "out")
    params = read_record(params_path)
    payload = in_path.read_bytes()
    ciphertext = kem_encrypt(
        params.scheme, params,
        parse_identity(params.scheme, identity or DEMO_IDENTITY), payload,
        config.rng("encrypt"))
    write_record(ciphertext, out, params.curve, use_armor, "CIPHERTEXT")
    transcript.log(f"{params.scheme}: encrypted {len(payload)} bytes to {out}")
    return 0


def _keys_decrypt(paths, transcript) -> int:
    params_path, key_path, in_path, out = _require(paths, "params", "key",
                                                   "in", "out")
    params, key = read_record(params_path), read_record(key_path)
    ciphertext = read_record(in_path)
    payload = kem_decrypt(params.scheme, params, key, ciphertext)
    out.write_bytes(payload)
    transcript.log(f"{params.scheme}: decrypted {len(payload)} bytes to {out}")
    return 0
