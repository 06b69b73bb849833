from linpi.sessions.session import (
    EndNode,
    InNode,
    OutNode,
    Payload,
    SessionId,
    SessionRef,
    SessionStore,
    TypeRef,
    decode,
)

__all__ = [
    "EndNode",
    "InNode",
    "OutNode",
    "Payload",
    "SessionId",
    "SessionRef",
    "SessionStore",
    "TypeRef",
    "decode",
]
