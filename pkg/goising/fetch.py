import os

import pooch

from .sgf import read_sgf


def is_url(text):
    return str(text).startswith(("http://", "https://"))


def fetch_sgf(url, known_hash=None):
    """
    Download an SGF record, or reuse the cached copy

    Parameters
    ----------
    url : str
        http(s) address of the record.

    known_hash : str, Default None
        Expected SHA256 of the file.  None skips the check.

    Returns
    -------
    path : str
        Local path of the cached file.
    """
    # pooch keeps the file in its cache directory and only downloads it once
    return pooch.retrieve(url=url, known_hash=known_hash, progressbar=False)


def local_path(item):
    """Local path of an input given as a path or a URL."""
    if is_url(item):
        return fetch_sgf(str(item))
    return os.fspath(item)


def load_game(item):
    """`SgfGame` read from a path or a URL."""
    return read_sgf(local_path(item))
