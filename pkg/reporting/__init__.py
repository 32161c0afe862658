from .report import FORMATS, csv_text, json_text, svg_text, to_frame, write_output
from .advanced_reporter import ElasticaReporter
