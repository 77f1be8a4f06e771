# This code is part of wcentropy.
#
# (C) Copyright the wcentropy developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Functions for getting version information about wcentropy."""


import os
import subprocess

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))


def _git_output(cmd):
    # minimal environment so that git output is not localized
    env = {k: os.environ[k] for k in ("SYSTEMROOT", "PATH") if k in os.environ}
    env.update(LANGUAGE="C", LANG="C", LC_ALL="C")
    proc = subprocess.run(
        cmd,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        env=env,
        cwd=os.path.dirname(ROOT_DIR),
        check=False,
    )
    if proc.returncode > 0:
        raise OSError(proc.stderr.decode("ascii", "replace"))
    return proc.stdout.strip().decode("ascii")


def git_version() -> str:
    """Get the current git head sha1."""
    try:
        return _git_output(["git", "rev-parse", "HEAD"])
    except OSError:
        return "Unknown"


with open(os.path.join(ROOT_DIR, "VERSION.txt"), "r") as version_file:
    VERSION = version_file.read().strip()


def get_version_info() -> str:
    """Get the full version string.

    Development checkouts that are not on a tagged commit get a
    ``.dev0+<sha>`` suffix.
    """
    full_version = VERSION

    if not os.path.exists(os.path.join(os.path.dirname(ROOT_DIR), ".git")):
        return full_version
    try:
        release = _git_output(["git", "tag", "-l", "--points-at", "HEAD"])
    except OSError:
        return full_version
    if not release:
        full_version += ".dev0+" + git_version()[:7]

    return full_version


__version__ = get_version_info()
