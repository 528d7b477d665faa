"""Paper ingestion: bytes in, structured document out.

Two readers share one output shape:

* Paged plain text / markdown, with pages separated by form feeds and
  markdown headings as section boundaries. This is the fully supported
  path and what fixture papers use.
* A minimal built-in PDF reader for unencrypted, born-digital PDFs:
  classic object layout, literal/hex text strings, content streams that
  are plain or filtered through any chain of ASCII85, ASCIIHex and
  Flate. Scanned PDFs (OCR) are out of scope.
"""

from __future__ import annotations

import base64
import re
import zlib
from dataclasses import dataclass, field

from .errors import EncryptedDocument, UnreadableDocument
from .textutil import sha256_hex


@dataclass
class Section:
    heading: str
    body: str


@dataclass
class FigureRef:
    ref: str
    caption: str = ""
    image_bytes: bytes | None = None


@dataclass
class PaperDocument:
    """Parsed paper: ordered sections, figures, and a stable digest."""

    title: str
    sections: list[Section]
    figures: list[FigureRef]
    page_count: int
    digest: str

    def full_text(self) -> str:
        parts = [self.title] if self.title else []
        for section in self.sections:
            if section.heading:
                parts.append(section.heading)
            if section.body:
                parts.append(section.body)
        return "\n\n".join(parts)


def parse_document(data: bytes, source_name: str = "paper") -> PaperDocument:
    """Parse paper bytes into a PaperDocument.

    Dispatches on content: %PDF magic goes to the PDF reader, anything
    that decodes as UTF-8 goes to the paged text reader.

    Raises:
        UnreadableDocument: empty input, undecodable bytes, or zero pages.
        EncryptedDocument: the PDF declares an /Encrypt dictionary.
    """
    if not data:
        raise UnreadableDocument("empty input")
    if data.startswith(b"%PDF-"):
        return _parse_pdf(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UnreadableDocument(f"{source_name}: neither PDF nor UTF-8 text") from exc
    return _parse_paged_text(text, digest=sha256_hex(data))


# --- paged text / markdown ------------------------------------------------

_MD_HEADING = re.compile(r"^(#{1,6})\s+(.*)$")
_MD_FIGURE = re.compile(r"!\[([^\]]*)\]\(([^)]+)\)")


def _parse_paged_text(text: str, digest: str) -> PaperDocument:
    pages = text.split("\f")
    if not any(page.strip() for page in pages):
        raise UnreadableDocument("document has no non-empty pages")

    title = ""
    sections: list[Section] = []
    figures: list[FigureRef] = []
    current_heading = ""
    current_body: list[str] = []

    def flush():
        if current_heading or "".join(current_body).strip():
            sections.append(Section(current_heading, "\n".join(current_body).strip()))

    for line in text.replace("\f", "\n").splitlines():
        match = _MD_HEADING.match(line)
        if match:
            if match.group(1) == "#" and not title:
                title = match.group(2).strip()
                continue
            flush()
            current_heading = match.group(2).strip()
            current_body = []
            continue
        for caption, ref in _MD_FIGURE.findall(line):
            figures.append(FigureRef(ref=ref, caption=caption))
        current_body.append(line)
    flush()

    if not title and sections:
        title = sections[0].heading or sections[0].body.splitlines()[0][:120]
    return PaperDocument(
        title=title,
        sections=sections,
        figures=figures,
        page_count=len(pages),
        digest=digest,
    )


# --- minimal PDF reader ---------------------------------------------------

_OBJ = re.compile(rb"(\d+)\s+(\d+)\s+obj(.*?)endobj", re.DOTALL)
# EOL before endstream is recommended but not universal; treat it as optional.
_STREAM = re.compile(rb"stream\r?\n(.*?)\r?\n?endstream", re.DOTALL)
_TEXT_SHOW = re.compile(rb"\((?:\\.|[^\\()])*\)\s*Tj|\[(?:[^\]]*)\]\s*TJ|<[0-9A-Fa-f\s]*>\s*Tj")
_LITERAL = re.compile(rb"\((?:\\.|[^\\()])*\)")
_HEXSTR = re.compile(rb"<([0-9A-Fa-f\s]*)>")
_NEWLINE_OP = re.compile(rb"(?:-?[\d.]+\s+-?[\d.]+\s+T[dD])|T\*")
_REF = re.compile(rb"(\d+)\s+\d+\s+R")
_HEADING_LINE = re.compile(r"^(?:\d+(?:\.\d+)*\.?\s+)\S.{0,78}$")
_HEADING_WORDS = ("abstract", "introduction", "references", "appendix", "conclusion")
_CAPTION_LINE = re.compile(r"^(?:Figure|Fig\.)\s*\d+[.:]?\s*(.*)$", re.IGNORECASE)


def _pdf_unescape(raw: bytes) -> str:
    out: list[str] = []
    i = 0
    while i < len(raw):
        ch = raw[i : i + 1]
        if ch == b"\\" and i + 1 < len(raw):
            nxt = raw[i + 1 : i + 2]
            if nxt in b"nrtbf":
                out.append({"n": "\n", "r": "\r", "t": "\t", "b": "\b", "f": "\f"}[nxt.decode()])
                i += 2
            elif nxt.isdigit():
                octal = b""
                j = i + 1
                while j < len(raw) and len(octal) < 3 and raw[j : j + 1] in b"01234567":
                    octal += raw[j : j + 1]
                    j += 1
                if octal:
                    out.append(chr(int(octal, 8) & 0xFF))
                i = j
            else:
                out.append(nxt.decode("latin-1"))
                i += 2
        else:
            out.append(ch.decode("latin-1"))
            i += 1
    return "".join(out)


def _decode_stream(dict_bytes: bytes, stream_bytes: bytes) -> bytes:
    # Filters apply in listed order; ASCII85 commonly wraps Flate.
    data = stream_bytes
    for filt in re.findall(rb"/(ASCII85Decode|ASCIIHexDecode|FlateDecode)", dict_bytes):
        try:
            if filt == b"ASCII85Decode":
                data = base64.a85decode(data.strip(), adobe=data.rstrip().endswith(b"~>"))
            elif filt == b"ASCIIHexDecode":
                digits = re.sub(rb"[\s>]", b"", data)
                data = bytes.fromhex(digits.decode("ascii"))
            else:
                data = zlib.decompress(data)
        except (ValueError, zlib.error):
            return b""
    return data


def _stream_text(content: bytes) -> str:
    """Pull shown text out of one decoded content stream."""
    lines: list[str] = []
    current: list[str] = []
    # Walk show-text and line-movement operators in order.
    ops = sorted(
        [(m.start(), "show", m.group(0)) for m in _TEXT_SHOW.finditer(content)]
        + [(m.start(), "nl", b"") for m in _NEWLINE_OP.finditer(content)]
    )
    for _, kind, chunk in ops:
        if kind == "nl":
            if current:
                lines.append("".join(current))
                current = []
            continue
        for lit in _LITERAL.findall(chunk):
            current.append(_pdf_unescape(lit[1:-1]))
        if chunk.lstrip().startswith(b"<"):
            hx = _HEXSTR.search(chunk)
            if hx:
                digits = re.sub(rb"\s", b"", hx.group(1))
                if len(digits) % 2:
                    digits += b"0"
                current.append(bytes.fromhex(digits.decode("ascii")).decode("latin-1"))
    if current:
        lines.append("".join(current))
    return "\n".join(line for line in lines if line.strip())


def _is_heading(line: str) -> bool:
    stripped = line.strip()
    if not stripped or len(stripped) > 80:
        return False
    if stripped.lower() in _HEADING_WORDS:
        return True
    return bool(_HEADING_LINE.match(stripped))


def _parse_pdf(data: bytes) -> PaperDocument:
    if b"/Encrypt" in data:
        raise EncryptedDocument("PDF declares an /Encrypt dictionary")

    objects: dict[int, bytes] = {}
    for match in _OBJ.finditer(data):
        objects[int(match.group(1))] = match.group(3)

    pages: list[bytes] = []
    for body in objects.values():
        head = _STREAM.split(body)[0]
        if re.search(rb"/Type\s*/Page\b(?!s)", head):
            pages.append(body)
    if not pages:
        raise UnreadableDocument("PDF contains no pages")

    page_texts: list[str] = []
    for body in pages:
        head = _STREAM.split(body)[0]
        contents = re.search(rb"/Contents\s+((?:\[[^\]]*\])|(?:\d+\s+\d+\s+R))", head)
        text_parts: list[str] = []
        if contents:
            for (ref,) in (m.groups() for m in _REF.finditer(contents.group(1))):
                obj = objects.get(int(ref))
                if obj is None:
                    continue
                stream = _STREAM.search(obj)
                if stream is None:
                    continue
                decoded = _decode_stream(_STREAM.split(obj)[0], stream.group(1))
                text_parts.append(_stream_text(decoded))
        page_texts.append("\n".join(p for p in text_parts if p))

    figures = _pdf_figures(objects)
    all_lines = [line for text in page_texts for line in text.splitlines()]

    title = ""
    sections: list[Section] = []
    current_heading = ""
    current_body: list[str] = []

    def flush():
        if current_heading:
            sections.append(Section(current_heading, "\n".join(current_body).strip()))

    fig_index = 0
    for line in all_lines:
        stripped = line.strip()
        caption = _CAPTION_LINE.match(stripped)
        if caption and fig_index < len(figures):
            figures[fig_index].caption = stripped
            fig_index += 1
        if not title and stripped:
            title = stripped
            continue
        if _is_heading(stripped):
            flush()
            current_heading = stripped
            current_body = []
        else:
            current_body.append(line)
    flush()
    if not sections:
        sections = [Section("", "\n".join(all_lines[1:]).strip())]

    return PaperDocument(
        title=title,
        sections=sections,
        figures=figures,
        page_count=len(pages),
        digest=sha256_hex(data),
    )


def _pdf_figures(objects: dict[int, bytes]) -> list[FigureRef]:
    figures: list[FigureRef] = []
    for num in sorted(objects):
        body = objects[num]
        head = _STREAM.split(body)[0]
        if b"/Subtype" not in head or b"/Image" not in head:
            continue
        stream = _STREAM.search(body)
        if stream is None:
            continue
        raw = stream.group(1)
        if b"/DCTDecode" in head:
            image = raw  # already JPEG
        else:
            image = _decode_stream(head, raw) or None
        figures.append(FigureRef(ref=f"figure-{len(figures) + 1:03d}", image_bytes=image))
    return figures


def read_paper(path) -> PaperDocument:
    """Parse the document at ``path``; see parse_document."""
    from pathlib import Path

    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise UnreadableDocument(f"cannot read {p}: {exc}") from exc
    return parse_document(data, source_name=p.name)


def save_document(doc: PaperDocument, directory) -> None:
    """Persist a parsed document so later stages never re-read the source.

    Figure images land as sibling binary files; everything else is one
    JSON file.
    """
    import json
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    figures = []
    for figure in doc.figures:
        entry = {"ref": figure.ref, "caption": figure.caption, "image": None}
        if figure.image_bytes:
            name = f"{figure.ref}.bin"
            (directory / name).write_bytes(figure.image_bytes)
            entry["image"] = name
        figures.append(entry)
    payload = {
        "title": doc.title,
        "digest": doc.digest,
        "page_count": doc.page_count,
        "sections": [{"heading": s.heading, "body": s.body} for s in doc.sections],
        "figures": figures,
    }
    (directory / "document.json").write_text(
        json.dumps(payload, indent=2) + "\n", encoding="utf-8"
    )


def load_document(directory) -> PaperDocument:
    import json
    from pathlib import Path

    directory = Path(directory)
    payload = json.loads((directory / "document.json").read_text(encoding="utf-8"))
    figures = []
    for entry in payload["figures"]:
        image = None
        if entry.get("image"):
            image = (directory / entry["image"]).read_bytes()
        figures.append(FigureRef(ref=entry["ref"], caption=entry.get("caption", ""), image_bytes=image))
    return PaperDocument(
        title=payload["title"],
        sections=[Section(heading=s["heading"], body=s["body"]) for s in payload["sections"]],
        figures=figures,
        page_count=payload["page_count"],
        digest=payload["digest"],
    )
