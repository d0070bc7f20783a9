"""Exception hierarchy for squier-lab"""


class SquierLabError(Exception):
    """Base error; `code` is the machine-readable tag used in CLI reports"""

    code = 'error'

    def to_dict(self):
        return {'code': self.code, 'message': str(self)}


class AlphabetError(SquierLabError):
    code = 'alphabet'


class RuleError(SquierLabError):
    code = 'rule'


class NonterminationSuspected(SquierLabError):
    """Raised when normalization exhausts its step limit"""

    code = 'nontermination'

    def __init__(self, word, steps):
        super().__init__(f"no normal form after {steps} steps")
        self.word = word
        self.steps = steps


class PathError(SquierLabError):
    code = 'path'


class ComplexError(SquierLabError):
    code = 'complex'


class ResourceLimitError(ComplexError):
    code = 'resource_limit'


class NotACycleError(SquierLabError):
    code = 'not_a_cycle'


class SequenceError(SquierLabError):
    code = 'sequence'


class MonoidTableError(SquierLabError):
    code = 'monoid_table'


class PresentationError(SquierLabError):
    code = 'presentation'


class ParseError(SquierLabError):
    """Syntax error in an input file, with 1-based line/column"""

    code = 'parse'

    def __init__(self, message, line=None, column=None):
        location = f" (line {line}, column {column})" if line is not None else ''
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column

    def to_dict(self):
        data = super().to_dict()
        if self.line is not None:
            data['line'] = self.line
            data['column'] = self.column
        return data


class ConfigError(SquierLabError):
    """Invalid run configuration or missing command argument"""

    code = 'config'
