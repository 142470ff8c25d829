"""Command line interface: dyntrack run | synth | serve."""

from __future__ import annotations

import argparse
import functools
import http.server
import os
import sys

from .ga import GaConfig
from .layout import LayoutMode
from .pipeline import RunConfig, run
from .synth import SynthSpec, write_synth


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyntrack",
                                     description="dynamic community tracking and layout")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="detect, measure and lay out a snapshot sequence")
    p_run.add_argument("--in", dest="input_dir", required=True,
                       help="directory of snapshot_<t>.edges files")
    p_run.add_argument("--algo", choices=["dyci", "ga", "both"], default="dyci")
    p_run.add_argument("--mode", choices=["free", "fixed", "anchored"], default="anchored")
    p_run.add_argument("--anchor-stiffness", type=float, default=0.5)
    p_run.add_argument("--out", dest="out_dir", required=True)
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--pop", type=int, default=100, help="GA population size")
    p_run.add_argument("--gens", type=int, default=50, help="GA generations")
    p_run.add_argument("--pc", type=float, default=0.9, help="GA crossover probability")
    p_run.add_argument("--pm", type=float, default=0.1, help="GA mutation probability")
    p_run.add_argument("--elite", type=float, default=0.20, help="GA elite fraction")

    p_synth = sub.add_parser("synth", help="generate a planted-partition dynamic sequence")
    p_synth.add_argument("--spec", required=True, help="JSON generator spec")
    p_synth.add_argument("--out", dest="out_dir", required=True)

    p_serve = sub.add_parser("serve", help="serve frames JSON and the browser UI")
    p_serve.add_argument("--frames", required=True)
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ui-dir", default=None,
                         help="directory of UI static files (default: bundled frontend/dist)")
    return parser


class _FramesHandler(http.server.SimpleHTTPRequestHandler):
    """Static file server that also exposes the frames file at /frames.json."""

    frames_path = ""

    def do_GET(self):
        if self.path.split("?")[0] == "/frames.json":
            try:
                with open(self.frames_path, "rb") as fh:
                    body = fh.read()
            except OSError:
                self.send_error(404, "frames file not found")
                return
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)
            return
        super().do_GET()

    def log_message(self, fmt, *args):
        print(f"serve: {fmt % args}")


def serve(frames: str, port: int, ui_dir: str | None) -> int:
    if ui_dir is None:
        root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
        ui_dir = os.path.join(root, "frontend", "dist")
        if not os.path.isdir(ui_dir):
            ui_dir = os.getcwd()
    handler = type("Handler", (_FramesHandler,), {"frames_path": os.path.abspath(frames)})
    handler = functools.partial(handler, directory=os.path.abspath(ui_dir))
    with http.server.ThreadingHTTPServer(("", port), handler) as httpd:
        print(f"serving {ui_dir} on http://localhost:{port} (frames at /frames.json)")
        try:
            httpd.serve_forever()
        except KeyboardInterrupt:
            pass
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        cfg = RunConfig(
            input_dir=args.input_dir,
            out_dir=args.out_dir,
            algorithm=args.algo,
            layout_mode=LayoutMode(kind=args.mode, anchor_stiffness=args.anchor_stiffness),
            ga_config=GaConfig(population_size=args.pop, generations=args.gens,
                               crossover_prob=args.pc, mutation_prob=args.pm,
                               elite_fraction=args.elite, rng_seed=args.seed),
            seed=args.seed,
        )
        return run(cfg)
    if args.command == "synth":
        try:
            spec = SynthSpec.from_json(args.spec)
        except (OSError, ValueError, TypeError) as exc:
            print(f"error: invalid generator spec: {exc}")
            return 1
        write_synth(spec, args.out_dir)
        print(f"wrote {spec.snapshots} snapshots to {args.out_dir}")
        return 0
    if args.command == "serve":
        return serve(args.frames, args.port, args.ui_dir)
    return 2


if __name__ == "__main__":
    sys.exit(main())
