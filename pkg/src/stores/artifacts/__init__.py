from .ArtifactStore import ArtifactStore
from .FieldSampleCodec import (
    encode_field_sample, decode_field_sample, save_field_sample, load_field_sample,
)
