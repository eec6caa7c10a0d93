from models.schemes.fields import FieldSample, GridSpec
import numpy as np

HEADER_DTYPE = np.dtype("<f8")
PAYLOAD_DTYPE = np.dtype("<c16")

def encode_field_sample(sample: FieldSample) -> bytes:
    """Header [n, N_1..N_n, L_1..L_n, time] as little-endian doubles, then psi and psi_dot
    as interleaved (re, im) doubles in C order."""
    grid = sample.grid
    header = np.array(
        [grid.n, *grid.points, *grid.extent, sample.time], dtype=HEADER_DTYPE
    )
    psi = np.ascontiguousarray(sample.psi, dtype=PAYLOAD_DTYPE)
    psi_dot = np.ascontiguousarray(sample.psi_dot, dtype=PAYLOAD_DTYPE)

    return header.tobytes() + psi.tobytes() + psi_dot.tobytes()

def decode_field_sample(payload: bytes, source: dict = None) -> FieldSample:
    n = int(np.frombuffer(payload, dtype=HEADER_DTYPE, count=1)[0])
    header = np.frombuffer(payload, dtype=HEADER_DTYPE, count=2 * n + 2)

    points = [int(value) for value in header[1:1 + n]]
    extent = [float(value) for value in header[1 + n:1 + 2 * n]]
    time = float(header[-1])
    grid = GridSpec(n=n, extent=extent, points=points)

    offset = header.nbytes
    size = int(np.prod(points))
    expected = offset + 2 * size * PAYLOAD_DTYPE.itemsize
    if len(payload) != expected:
        raise ValueError(f"field sample payload has {len(payload)} bytes, expected {expected}")

    psi = np.frombuffer(payload, dtype=PAYLOAD_DTYPE, count=size, offset=offset)
    psi_dot = np.frombuffer(
        payload, dtype=PAYLOAD_DTYPE, count=size, offset=offset + size * PAYLOAD_DTYPE.itemsize
    )

    return FieldSample(
        grid=grid,
        time=time,
        psi=psi.reshape(grid.shape).astype(np.complex128),
        psi_dot=psi_dot.reshape(grid.shape).astype(np.complex128),
        source=source or {},
    )

def save_field_sample(sample: FieldSample, store, name: str) -> str:
    return store.write_bytes(name, encode_field_sample(sample))

def load_field_sample(path: str, source: dict = None) -> FieldSample:
    with open(path, "rb") as handle:
        return decode_field_sample(handle.read(), source=source)
