"""Exception types shared across the package.

Validation errors (bad inputs, violated preconditions) derive from
ValidationError; the CLI maps those to exit code 1 and everything else to 2.
"""


class EgoPatternsError(Exception):
    pass


class ValidationError(EgoPatternsError):
    pass


class SelfLoop(ValidationError):
    def __init__(self, node, record_index):
        super().__init__(f"self-loop on node {node!r} at record {record_index}")
        self.node = node
        self.record_index = record_index


class NegativeOrZeroWeight(ValidationError):
    def __init__(self, weight, record_index):
        super().__init__(f"weight {weight!r} at record {record_index} is not > 0")
        self.weight = weight
        self.record_index = record_index


class UnknownNode(ValidationError):
    def __init__(self, node):
        super().__init__(f"node {node!r} is not in the graph")
        self.node = node


class EmptyGraph(ValidationError):
    pass


class KTooLarge(ValidationError):
    def __init__(self, k, limit):
        super().__init__(f"k={k} exceeds the number of usable points ({limit})")
        self.k = k
        self.limit = limit


class SingleCluster(ValidationError):
    pass


class EmptyCluster(ValidationError):
    pass


class TooFewPoints(ValidationError):
    pass


class GenerationFailed(EgoPatternsError):
    def __init__(self, label, attempts):
        super().__init__(f"could not generate a valid {label} graph in {attempts} attempts")
        self.label = label
        self.attempts = attempts


class ParseError(ValidationError):
    def __init__(self, path, line, reason):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


class EmptyInput(ValidationError):
    pass


class PipelineStageError(EgoPatternsError):
    """Wraps a module error with the pipeline stage it occurred in."""

    def __init__(self, stage, original):
        super().__init__(f"stage {stage!r}: {original}")
        self.stage = stage
        self.original = original
