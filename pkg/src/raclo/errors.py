"""Exception taxonomy shared across the package."""


class RacloError(Exception):
    """Base class for every error raised by this package."""


# --- dataset and query algebra -------------------------------------------

class InadmissibleTaskType(RacloError):
    """Cue subset is not one of the nine admissible task types."""


class MissingCue(RacloError):
    """A cue required by the task type has no text."""


class MalformedTimestamp(RacloError):
    """Timestamp string does not match the ``MM:SS / MM:SS`` shape."""


class AnchorBeyondDuration(RacloError):
    """Anchor time is at or past the video duration."""


class DurationOutOfRange(RacloError):
    """Duration falls outside the supported (0, 3600] second range."""


class MalformedRecord(RacloError):
    """A manifest line could not be decoded into a memory record."""


# --- sampling geometry ----------------------------------------------------

class InvalidPlan(RacloError):
    """Sampling plan with a non-positive frame count or duration."""


# --- agent wire format ----------------------------------------------------

class AgentParseError(RacloError):
    """Base for malformed agent output; triggers a bounded re-prompt."""


class NoToolCall(AgentParseError):
    """No well-formed ``<tool_call>`` span in the agent output."""


class MalformedToolJson(AgentParseError):
    """Tool call body is not a JSON object with name and arguments."""


class UnknownTool(AgentParseError):
    """Tool call names a tool other than ``search_videos``."""


class BadArguments(AgentParseError):
    """``query`` argument missing, empty, or not a list of strings."""


class AgentExhausted(RacloError):
    """Retry budget spent without obtaining a valid tool call."""


class SearchBackendError(RacloError):
    """Search backend failure; carries the episode trace so far."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace


# --- media ingest ---------------------------------------------------------

class IngestError(RacloError):
    """Base for acquisition and extraction failures."""


class Unavailable(IngestError):
    """Downloader signalled a missing, private, or blocked video."""


class TooLong(IngestError):
    """Probed duration exceeds the configured cap."""


class DownloaderFailed(IngestError):
    """Downloader exited nonzero without an unavailability marker."""


class ProbeFailed(IngestError):
    """Media probe failed or reported an unusable duration."""


class DecodeFailed(IngestError):
    """Frame extraction did not produce the requested images."""


class NoAudioStream(IngestError):
    """Asset has no audio track; callers downgrade to visual-only."""


class TranscodeFailed(IngestError):
    """Audio extraction tool failed."""


# --- model I/O ------------------------------------------------------------

class CapabilityMismatch(RacloError):
    """Request contains audio but the backend does not accept audio."""


class TransportError(RacloError):
    """Retriable transport failure (timeouts, 429, 5xx)."""


class TransportExhausted(RacloError):
    """Transport retry budget spent."""


class BackendRefusal(RacloError):
    """Non-retriable backend error."""


class ScriptMiss(BackendRefusal):
    """Scripted backend has no response for the request fingerprint."""


class NoJsonFound(RacloError):
    """Model output contains no parseable JSON object."""


class SchemaMismatch(RacloError):
    """JSON object does not satisfy the expected verdict schema."""


# --- URLs -----------------------------------------------------------------

class NotAUrl(RacloError):
    """String cannot be interpreted as a URL."""


# --- evaluation -----------------------------------------------------------

class DuplicateConfig(RacloError):
    """Two ablation runs share the same (q, u, frame_count) key."""


class MissingLabel(RacloError):
    """Human label missing for a sample present in the automated set."""


# --- orchestration --------------------------------------------------------

class ConfigError(RacloError):
    """Run configuration is invalid."""


class CorruptRecord(RacloError):
    """Run event log contains an undecodable record."""
