import json

import pandas

from api.apps.instrumentation.models import StepTrace, TraceFormat


class TraceRenderer:
    """Renders a StepTrace as an aligned table or as JSON"""

    def __init__(self, trace: StepTrace):
        self.trace = trace

    def to_table(self) -> str:
        if not self.trace.rows:
            return " ".join(self.trace.headers)
        dataframe = pandas.DataFrame(self.trace.rows, columns=self.trace.headers)
        return dataframe.to_string(index=False)

    def to_dict(self) -> dict:
        return {
            "algorithm": str(self.trace.algorithm),
            "headers": list(self.trace.headers),
            "rows": [list(row) for row in self.trace.rows],
            "d": str(self.trace.final.d),
            "k": str(self.trace.final.k),
            "iterations": self.trace.final.iterations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self, format: TraceFormat) -> str:
        if TraceFormat(format) == TraceFormat.JSON:
            return self.to_json()
        return self.to_table()


def render_trace(trace: StepTrace, format: TraceFormat = TraceFormat.TABLE) -> str:
    return TraceRenderer(trace).render(format)
