from enum import Enum

class ArtifactTypeEnum(Enum):

    CONFIG = "config.json"
    MANIFEST = "manifest.json"
    PROFILE_CSV = "profile.csv"
    PROFILE_SIDECAR = "profile.json"
    REPORT = "report.json"
    SCAN_CSV = "boost_scan.csv"
    SCAN_SUMMARY = "boost_scan.json"
    DIAGNOSTICS = "diagnostics.csv"
    EVOLVE_SUMMARY = "evolve.json"
    SNAPSHOT_PREFIX = "snapshot_"
    SNAPSHOT_SUFFIX = ".bin"
