from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from utils.json_format import dumps_fixed
import pandas as pd
import tempfile
import logging
import os

logger = logging.getLogger(__name__)

class ArtifactStore:
    """Writes run artifacts under one output directory, each file atomically."""

    def __init__(self, output_path: str, app_name: str = None, app_version: str = None):
        self.output_path = output_path
        self.app_name = app_name
        self.app_version = app_version
        self.artifacts = []

        os.makedirs(self.output_path, exist_ok=True)

    def get_path(self, name: str):
        return os.path.join(self.output_path, name)

    def write_bytes(self, name: str, payload: bytes):
        handle = tempfile.NamedTemporaryFile(
            dir=self.output_path, prefix=f".{name}.", suffix=".tmp", delete=False
        )
        try:
            with handle:
                handle.write(payload)
            os.replace(handle.name, self.get_path(name))
        except BaseException:
            if os.path.exists(handle.name):
                os.remove(handle.name)
            raise

        if name not in self.artifacts:
            self.artifacts.append(name)
        logger.debug(f"wrote artifact {name} ({len(payload)} bytes)")

        return self.get_path(name)

    def write_text(self, name: str, text: str):
        return self.write_bytes(name, text.encode("utf-8"))

    def write_json(self, name: str, payload):
        return self.write_text(name, dumps_fixed(payload) + "\n")

    def write_table(self, name: str, table: pd.DataFrame):
        text = table.to_csv(index=False, float_format="%.17g", lineterminator="\n")
        return self.write_text(name, text)

    def write_manifest(self, config: dict):
        manifest = {
            "app": self.app_name,
            "version": self.app_version,
            "artifacts": sorted(self.artifacts),
            "config": config,
        }
        path = self.write_json(ArtifactTypeEnum.MANIFEST.value, manifest)
        logger.info(f"manifest lists {len(manifest['artifacts'])} artifacts under {self.output_path}")

        return path
