#!/usr/bin/env python3
# Copyright 2026 The MathSculpt Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Prepend the Apache-2.0 header to project sources that lack it."""

import argparse
import pathlib
import sys

NOTICE = """Copyright 2026 The MathSculpt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License."""

ROOTS = ["CMakeLists.txt", "core", "tools", "tests", "benchmarks", "scripts"]
SKIP_DIRS = {"fixtures", "vendor", "build"}


def comment_style(path):
    if path.suffix in (".cpp", ".hpp", ".h", ".cc"):
        return "//"
    if path.name == "CMakeLists.txt" or path.suffix in (".py", ".cmake") or path.name.endswith(".cmake.in"):
        return "#"
    return None


def header(prefix):
    return "\n".join(f"{prefix} {line}".rstrip() for line in NOTICE.splitlines()) + "\n\n"


def sources(root):
    for top in ROOTS:
        p = root / top
        candidates = [p] if p.is_file() else sorted(p.rglob("*"))
        for f in candidates:
            if f.is_file() and not SKIP_DIRS.intersection(f.relative_to(root).parts):
                if comment_style(f):
                    yield f


def apply(path, check):
    text = path.read_text()
    if "Copyright 2026 The MathSculpt Authors." in text[:400]:
        return False
    if check:
        return True
    block = header(comment_style(path))
    if text.startswith("#!"):
        shebang, _, rest = text.partition("\n")
        text = shebang + "\n" + block + rest
    else:
        text = block + text
    path.write_text(text)
    return True


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", type=pathlib.Path, default=pathlib.Path(__file__).resolve().parent.parent)
    parser.add_argument("--check", action="store_true", help="list files missing the header and fail")
    args = parser.parse_args()
    changed = [f for f in sources(args.root) if apply(f, args.check)]
    for f in changed:
        print(f.relative_to(args.root))
    return 1 if args.check and changed else 0


if __name__ == "__main__":
    sys.exit(main())
