"""
Class defines ParamFile, which reads and writes the plain key=value text
format used for curve profiles. Values are decimal big integers except
the profile name; the round trip is bit-exact.
"""
# == Standard Library imports ==
from pathlib import Path

# == Local imports ==
from .errors import FormatError

PARAM_SUFFIX = ".param"


class ParamFile:
    """
    Class for a key=value parameter file.
    """

    def __init__(self, fpath: str | Path):
        self.filepath = Path(fpath)

    def load(self) -> dict[str, str]:
        """
        Method loads the file; blank lines and '#' comments are skipped.
        :return: Ordered dict of raw string values.
        """
        if not self.filepath.exists():
            raise FileNotFoundError(f"Parameter file not found: {self.filepath}")
        if self.filepath.suffix.lower() != PARAM_SUFFIX:
            raise ValueError(f"Invalid file type: {self.filepath.suffix}")
        values: dict[str, str] = {}
        for lineno, line in enumerate(
                self.filepath.read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise FormatError(f"{self.filepath}:{lineno}: expected key=value")
            values[key.strip()] = value.strip()
        return values

    def load_ints(self, keys: list[str]) -> dict[str, int]:
        """
        Method loads and converts the named keys to integers.
        """
        raw = self.load()
        missing = [k for k in keys if k not in raw]
        if missing:
            raise FormatError(f"{self.filepath}: missing keys {missing}")
        try:
            return {k: int(raw[k]) for k in keys}
        except ValueError as exc:
            raise FormatError(f"{self.filepath}: {exc}") from exc

    def write(self, values: dict[str, int | str],
              header: str | None = None) -> None:
        lines = [f"# {header}"] if header else []
        lines += [f"{key}={value}" for key, value in values.items()]
        self.filepath.parent.mkdir(parents=True, exist_ok=True)
        self.filepath.write_text("\n".join(lines) + "\n", encoding="utf-8")
