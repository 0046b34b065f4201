import logging
import os
from pathlib import Path, PurePosixPath
from urllib.parse import urlparse

import fsspec
from fsspec import AbstractFileSystem

from quantum_concepts_py.logs import get_logger

logger = get_logger(Path(__file__).stem, level=logging.INFO)

CONFIG_EXTENSIONS = (".yaml", ".yml", ".json")


def is_remote_path(path: str) -> bool:
    scheme = urlparse(path).scheme
    # A single letter is a Windows drive, not a protocol
    return scheme not in ("", "file") and len(scheme) > 1


def get_filesystem(path: str) -> AbstractFileSystem:
    fs, _ = fsspec.core.url_to_fs(path)
    return fs


def check_file_exists(path: str) -> bool:
    return get_filesystem(path).isfile(path)


def check_directory_exists(path: str) -> bool:
    return get_filesystem(path).isdir(path)


def check_file_extension(path: str, accepted_file_extensions: tuple[str, ...]) -> bool:
    """Case-insensitive suffix test; works for local paths and URLs alike."""
    return PurePosixPath(urlparse(path).path).suffix.lower() in accepted_file_extensions


def is_config_document(path: str) -> bool:
    return check_file_extension(path, CONFIG_EXTENSIONS)


def read_text(path: str) -> str:
    fs = get_filesystem(path=path)
    with fs.open(path, "r") as file:
        return file.read()


def write_text(path: str, text: str) -> None:
    """
    Write text with LF line endings, creating the parent directory of
    local paths if needed.
    """
    fs = get_filesystem(path=path)
    parent = os.path.dirname(path.rstrip("/"))
    if parent and not is_remote_path(path) and not check_directory_exists(parent):
        fs.makedirs(parent, exist_ok=True)
        logger.info(f"Created the directory {parent}")

    with fs.open(path, "w", newline="\n") as file:
        file.write(text)
    logger.info(f"Output written to {path}")
