import json
from typing import Any

from rich.console import Console
from rich.rule import Rule
from rich.table import Table
from rich.text import Text

from coxinv.models import BenchRecord, Emission, VerifyReport

_STATUS_STYLES = {'pass': 'green', 'fail': 'bold red'}


class Renderer:
    def render(self, console: Console, content: Any, **kwargs) -> None:
        raise NotImplementedError()


class CLIExceptionRenderer(Renderer):
    def render(self, console: Console, content: Any, **kwargs) -> None:
        if content:
            table = Table(title='Error Details')
            table.add_column('Detail', style='cyan')
            table.add_column('Value', style='magenta')
            for key, value in content.items():
                table.add_row(str(key), str(value))
            console.print(table)


class VerifyReportJSONRenderer(Renderer):
    """One JSON document: the report itself, or a list of reports for `all`."""

    def render(self, console: Console, content: list[VerifyReport], **kwargs) -> None:
        documents = [report.as_json() for report in content]
        payload = documents[0] if len(documents) == 1 else documents
        console.out(json.dumps(payload, indent=2), highlight=False)


class VerifyReportTextRenderer(Renderer):
    def render(self, console: Console, content: list[VerifyReport], **kwargs) -> None:
        for report in content:
            console.print(Rule(f'{report.suite}'))
            table = Table(title=f'{report.suite} ({report.wall_time_ms} ms)')
            table.add_column('Check', style='cyan')
            table.add_column('Status')
            table.add_column('Detail', style='yellow')
            for check in report.checks:
                status = check.status.value
                table.add_row(check.label, Text(status, style=_STATUS_STYLES[status]), check.detail)
            console.print(table)
            if report.derived_constants:
                constants = Table(title='Derived constants')
                constants.add_column('Name', style='cyan', no_wrap=True)
                constants.add_column('Value', style='green')
                for name, value in report.derived_constants.items():
                    constants.add_row(name, str(value))
                console.print(constants)
            status = report.status.value
            console.print(Text.assemble('Status: ', (status, _STATUS_STYLES[status])))


class EmissionRenderer(Renderer):
    """Canonical text or JSON, written as plain text so it stays byte-identical across runs."""

    def render(self, console: Console, content: Emission, **kwargs) -> None:
        console.out(emission_text(content, kwargs.get('output_format', 'text')), highlight=False)


def emission_text(content: Emission, output_format: str = 'text') -> str:
    if output_format == 'json':
        payload: dict[str, Any] = {'name': content.name, 'value': content.payload}
        if content.header:
            payload['provenance'] = content.header.lstrip('# ')
        return json.dumps(payload, indent=2)
    if content.header:
        return f'{content.header}\n{content.text}'
    return content.text


class BenchRecordRenderer(Renderer):
    def render(self, console: Console, content: BenchRecord, **kwargs) -> None:
        console.out(json.dumps(content.as_json(), indent=2), highlight=False)
