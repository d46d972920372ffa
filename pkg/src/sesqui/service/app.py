"""HTTP service exposing the core operations.

Stateless wrappers: each endpoint validates with pydantic, calls the
same library functions the CLI uses and returns JSON.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from .. import catalog, divisibility, even_tree, fibs
from ..numerals import decode, encode_integer, normalize, parse_raw_digits
from . import models


def create_app() -> FastAPI:
    app = FastAPI(
        title="sesqui",
        description="Base 3/2 numerals, their sequences and digit dynamics.",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/encode/{n}", response_model=models.EncodeResponse)
    def encode(n: int) -> models.EncodeResponse:
        try:
            numeral = encode_integer(n)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.EncodeResponse(
            n=n, numeral=str(numeral), digit_count=len(numeral)
        )

    @app.get("/decode/{digits}", response_model=models.DecodeResponse)
    def decode_digits(digits: str) -> models.DecodeResponse:
        try:
            raw = parse_raw_digits(digits)
            value = decode(raw)
            canonical = str(normalize(raw))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.DecodeResponse(
            digits=digits,
            numerator=value.numerator,
            denominator=value.denominator,
            is_integer=value.denominator == 1,
            canonical=canonical,
        )

    @app.get("/sequences", response_model=list[models.SequenceInfo])
    def sequences_index() -> list[models.SequenceInfo]:
        out = []
        for name in sorted(catalog.REGISTRY):
            d = catalog.REGISTRY[name]
            out.append(
                models.SequenceInfo(
                    name=d.name,
                    description=d.description,
                    first_index=d.first_index,
                    forms=list(d.forms),
                )
            )
        return out

    @app.get("/sequences/{name}", response_model=models.SequenceResponse)
    def sequence_terms(
        name: str,
        count: int = Query(default=10, ge=0, le=10000),
        form: str | None = Query(default=None),
    ) -> models.SequenceResponse:
        try:
            descriptor = catalog.resolve(name)
            terms = descriptor.emit(count, form)
        except catalog.UnknownSequence:
            raise HTTPException(status_code=404, detail=f"unknown sequence {name!r}")
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.SequenceResponse(
            name=descriptor.name,
            form=form or descriptor.default_form,
            first_index=descriptor.first_index,
            terms=terms,
        )

    @app.get("/tree", response_model=models.TreeResponse)
    def tree(depth: int = Query(ge=1, le=30)) -> models.TreeResponse:
        root = even_tree.build_tree(depth)
        nodes = [
            models.TreeNode(depth=d, digit=node.edge_digit, value=node.value)
            for d, node in even_tree.iter_preorder(root)
        ]
        return models.TreeResponse(
            depth=depth, nodes=nodes, rendered=even_tree.render_tree(root)
        )

    @app.get("/divisibility/{n}", response_model=models.DivisibilityResponse)
    def divisibility_report(n: int) -> models.DivisibilityResponse:
        try:
            r = divisibility.report(n)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.DivisibilityResponse(
            n=r.n,
            numeral=r.numeral,
            trailing_zeros=r.trailing_zeros,
            three_adic_valuation=r.three_adic_valuation,
            alt_digit_sum_mod5=r.alt_digit_sum_mod5,
        )

    @app.post("/fibs/classify", response_model=models.BehaviorResponse)
    def classify(request: models.ClassifyRequest) -> models.BehaviorResponse:
        try:
            behavior = fibs.classify(request.mode, request.start, request.cap)
        except fibs.CapExceeded as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.BehaviorResponse(**behavior.to_dict())

    @app.post("/fibs/sweep", response_model=models.SweepResponse)
    def sweep(request: models.SweepRequest) -> models.SweepResponse:
        summary = fibs.exhaustive_classification(
            request.mode, request.max_digits, request.cap
        )
        return models.SweepResponse(
            mode=summary.mode,
            max_digits=summary.max_total_digits,
            total_pairs=summary.total_pairs,
            cap_exceeded=summary.cap_exceeded,
            rows=[
                models.SweepRow(kind=row.kind, twos=row.twos, count=row.count)
                for row in summary.rows
            ],
        )

    @app.post("/bfile/verify", response_model=models.VerifyResponse)
    def verify(request: models.VerifyRequest) -> models.VerifyResponse:
        try:
            entries = catalog.parse_bfile_text(request.content)
            report = catalog.verify_entries(request.name, entries)
        except catalog.UnknownSequence:
            raise HTTPException(
                status_code=404, detail=f"unknown sequence {request.name!r}"
            )
        except (catalog.ParseError, catalog.NonMonotonicIndex) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        payload = report.to_dict()
        mismatch = payload.pop("mismatch", None)
        return models.VerifyResponse(
            **payload,
            mismatch=models.MismatchModel(**mismatch) if mismatch else None,
        )

    return app


app = create_app()
