"""Validator fixture that misbehaves on purpose: crash, hang, garbage, or exit early."""

import json
import sys
import time

mode = sys.argv[1]

if mode == "crash":
    raise SystemExit(1)

for line in sys.stdin:
    if mode == "hang":
        time.sleep(60)
    elif mode == "garbage":
        print("not json", flush=True)
    elif mode == "wrong-type":
        print(json.dumps({"valid": "yes"}), flush=True)
    elif mode == "true-then-exit":
        print(json.dumps({"valid": True}), flush=True)
        raise SystemExit(0)
