# src/planarc5/api/service.py
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from planarc5 import __version__
from planarc5.config import get_settings
from planarc5.constructions.families import build
from planarc5.counting.cycles import CountReport, census
from planarc5.errors import Planarc5Error
from planarc5.graphs.graph6 import graph6_decode, graph6_encode
from planarc5.planarity.embedding import embed, export_rotation

app = FastAPI(title="planarc5 API", version=__version__)

app.add_middleware(
    CORSMiddleware,
    allow_origins=get_settings().cors_origins,
    allow_methods=["*"],
    allow_headers=["*"],
)


# --- Request / response models ---
class GraphRequest(BaseModel):
    graph6: str


class EmbedRequest(GraphRequest):
    outer_face: int | None = None


class EmbedResponse(BaseModel):
    graph6: str
    rotation: str
    faces: list[list[int]]
    outer_face: int


@app.exception_handler(Planarc5Error)
async def domain_error(request: Request, exc: Planarc5Error):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health")
async def health():
    return {"status": "ok", "version": __version__}


@app.post("/count", response_model=CountReport)
def count(payload: GraphRequest):
    return census(graph6_decode(payload.graph6))


@app.get("/construct/{family}/{n}")
def construct(family: str, n: int):
    g, spec = build(family, n)
    return {"graph6": graph6_encode(g), **spec.model_dump(mode="json")}


@app.post("/embed", response_model=EmbedResponse)
def embed_graph(payload: EmbedRequest):
    e = embed(graph6_decode(payload.graph6), outer_face=payload.outer_face)
    return EmbedResponse(
        graph6=payload.graph6,
        rotation=export_rotation(e),
        faces=[e.face_set.vertices(i) for i in range(len(e.face_set))],
        outer_face=e.outer_face,
    )
