"""Paper ingestion: paged text, the built-in PDF reader, persistence."""

import hashlib
import io

import pytest

from paperweb.document import (
    PaperDocument,
    Section,
    FigureRef,
    load_document,
    parse_document,
    read_paper,
    save_document,
)
from paperweb.errors import EncryptedDocument, UnreadableDocument

PAGED_TEXT = """\
# Queueing Under Load

## Abstract

Requests arrive faster than they are served.

## Model

Arrival rate lambda, service rate mu.
![server diagram](figures/server.png)
\f
## Results

The queue diverges when lambda exceeds mu.
"""


def make_pdf(lines_per_page, encrypt: str | None = None) -> bytes:
    from reportlab.lib.pagesizes import LETTER
    from reportlab.pdfgen import canvas

    buf = io.BytesIO()
    kwargs = {"pagesize": LETTER}
    if encrypt is not None:
        kwargs["encrypt"] = encrypt
    pdf = canvas.Canvas(buf, **kwargs)
    for lines in lines_per_page:
        y = 720
        for line in lines:
            pdf.drawString(72, y, line)
            y -= 18
        pdf.showPage()
    pdf.save()
    return buf.getvalue()


class TestPagedText:
    def test_title_sections_pages(self):
        doc = parse_document(PAGED_TEXT.encode("utf-8"))
        assert doc.title == "Queueing Under Load"
        assert doc.page_count == 2
        assert [s.heading for s in doc.sections] == ["Abstract", "Model", "Results"]
        assert "lambda exceeds mu" in doc.sections[2].body

    def test_figure_references_collected(self):
        doc = parse_document(PAGED_TEXT.encode("utf-8"))
        assert [f.ref for f in doc.figures] == ["figures/server.png"]
        assert doc.figures[0].caption == "server diagram"

    def test_digest_is_sha256_of_input_bytes(self):
        data = PAGED_TEXT.encode("utf-8")
        assert parse_document(data).digest == hashlib.sha256(data).hexdigest()

    def test_full_text_concatenates_title_and_sections(self):
        doc = parse_document(PAGED_TEXT.encode("utf-8"))
        text = doc.full_text()
        assert text.startswith("Queueing Under Load")
        assert "Abstract" in text and "Results" in text

    def test_plain_text_without_headings_still_parses(self):
        doc = parse_document(b"just a paragraph of prose\nwith two lines")
        assert doc.page_count == 1
        assert doc.sections
        assert doc.title  # falls back to leading content

    def test_empty_input_rejected(self):
        with pytest.raises(UnreadableDocument):
            parse_document(b"")

    def test_whitespace_only_pages_rejected(self):
        with pytest.raises(UnreadableDocument):
            parse_document(b" \f  \f ")

    def test_binary_garbage_rejected(self):
        with pytest.raises(UnreadableDocument):
            parse_document(b"\xff\xfe\x00\x01binary")


class TestPdfReader:
    def test_pages_title_and_text(self):
        data = make_pdf(
            [
                ["Streaming Joins at Scale", "Abstract", "We join unbounded streams."],
                ["2. Method", "Windows bound the state kept per key."],
            ]
        )
        doc = parse_document(data)
        assert doc.page_count == 2
        assert doc.title == "Streaming Joins at Scale"
        headings = [s.heading for s in doc.sections]
        assert "Abstract" in headings
        assert "2. Method" in headings
        assert any("unbounded streams" in s.body for s in doc.sections)

    def test_digest_is_sha256_of_pdf_bytes(self):
        data = make_pdf([["Title line", "body text"]])
        assert parse_document(data).digest == hashlib.sha256(data).hexdigest()

    def test_encrypted_pdf_detected(self):
        data = make_pdf([["Secret paper"]], encrypt="owner-password")
        with pytest.raises(EncryptedDocument):
            parse_document(data)

    def test_pdf_without_pages_rejected(self):
        with pytest.raises(UnreadableDocument):
            parse_document(b"%PDF-1.4\n%%EOF\n")


class TestReadPaper:
    def test_reads_text_file(self, tmp_path):
        path = tmp_path / "paper.md"
        path.write_text(PAGED_TEXT, encoding="utf-8")
        assert read_paper(path).title == "Queueing Under Load"

    def test_reads_pdf_file(self, tmp_path):
        path = tmp_path / "paper.pdf"
        path.write_bytes(make_pdf([["A PDF Title", "some body"]]))
        assert read_paper(path).title == "A PDF Title"

    def test_missing_file_raises_unreadable(self, tmp_path):
        with pytest.raises(UnreadableDocument):
            read_paper(tmp_path / "absent.pdf")


class TestPersistence:
    def doc(self) -> PaperDocument:
        return PaperDocument(
            title="T",
            sections=[Section("H", "body"), Section("", "tail")],
            figures=[
                FigureRef(ref="figure-001", caption="cap", image_bytes=b"\x01\x02"),
                FigureRef(ref="figures/x.png", caption="no bytes"),
            ],
            page_count=3,
            digest="d" * 64,
        )

    def test_round_trip(self, tmp_path):
        original = self.doc()
        save_document(original, tmp_path / "spec")
        loaded = load_document(tmp_path / "spec")
        assert loaded == original

    def test_figure_bytes_stored_as_sibling_files(self, tmp_path):
        save_document(self.doc(), tmp_path / "spec")
        assert (tmp_path / "spec" / "figure-001.bin").read_bytes() == b"\x01\x02"
        assert (tmp_path / "spec" / "document.json").exists()
