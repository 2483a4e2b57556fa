/** DOM wiring for the explorer page. */

import { ApiError, Client } from "./api.js";
import { LatestWins } from "./latest.js";
import { draw, layout, nearest, type ScreenPoint } from "./scatter.js";
import type { Scored } from "./types.js";

const client = new Client("");
const gates: Record<string, LatestWins> = {
  similarity: new LatestWins(),
  neighbors: new LatestWins(),
  analogy: new LatestWins(),
  compare: new LatestWins(),
  map: new LatestWins(),
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showTab(name: string): void {
  for (const panel of document.querySelectorAll<HTMLElement>(".panel")) {
    panel.hidden = panel.dataset.tab !== name;
  }
  for (const button of document.querySelectorAll<HTMLElement>(".tab")) {
    button.classList.toggle("active", button.dataset.tab === name);
  }
}

function renderError(target: HTMLElement, err: unknown): void {
  const message =
    err instanceof ApiError
      ? err.word
        ? `${err.message}`
        : err.message
      : String(err);
  target.innerHTML = "";
  const div = document.createElement("div");
  div.className = "error";
  div.textContent = message;
  target.appendChild(div);
}

function renderScores(target: HTMLElement, rows: Scored[]): void {
  target.innerHTML = "";
  const table = document.createElement("table");
  for (const row of rows) {
    const tr = document.createElement("tr");
    const word = document.createElement("td");
    word.textContent = row.word;
    const score = document.createElement("td");
    score.textContent = row.score.toFixed(4);
    tr.append(word, score);
    table.appendChild(tr);
  }
  target.appendChild(table);
}

function renderScore(target: HTMLElement, score: number): void {
  target.innerHTML = "";
  const div = document.createElement("div");
  div.className = "score";
  div.textContent = score.toFixed(6);
  target.appendChild(div);
}

function words(raw: string): string[] {
  return raw.split(/[\s,]+/).filter((w) => w.length > 0);
}

function runNeighbors(word: string): void {
  const out = el<HTMLElement>("neighbors-out");
  void gates["neighbors"]!
    .run(() => client.mostSimilar(word, 10))
    .then((res) => {
      if (res) renderScores(out, res.neighbors);
    })
    .catch((err) => renderError(out, err));
}

function setupForms(): void {
  el<HTMLFormElement>("similarity-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const out = el<HTMLElement>("similarity-out");
    void gates["similarity"]!
      .run(() =>
        client.similarity(
          el<HTMLInputElement>("sim-w1").value.trim(),
          el<HTMLInputElement>("sim-w2").value.trim(),
        ),
      )
      .then((res) => {
        if (res) renderScore(out, res.score);
      })
      .catch((err) => renderError(out, err));
  });

  el<HTMLFormElement>("neighbors-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    runNeighbors(el<HTMLInputElement>("nb-w").value.trim());
  });

  el<HTMLFormElement>("analogy-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const out = el<HTMLElement>("analogy-out");
    void gates["analogy"]!
      .run(() =>
        client.analogy(
          el<HTMLInputElement>("an-a").value.trim(),
          el<HTMLInputElement>("an-b").value.trim(),
          el<HTMLInputElement>("an-c").value.trim(),
          10,
        ),
      )
      .then((res) => {
        if (res) renderScores(out, res.results);
      })
      .catch((err) => renderError(out, err));
  });

  el<HTMLFormElement>("compare-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const out = el<HTMLElement>("compare-out");
    void gates["compare"]!
      .run(() =>
        client.compare(
          words(el<HTMLTextAreaElement>("cmp-g1").value),
          words(el<HTMLTextAreaElement>("cmp-g2").value),
        ),
      )
      .then((res) => {
        if (res) renderScore(out, res.score);
      })
      .catch((err) => renderError(out, err));
  });
}

function setupMap(): void {
  const canvas = el<HTMLCanvasElement>("map-canvas");
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  let screen: ScreenPoint[] = [];
  let hovered: ScreenPoint | null = null;

  el<HTMLFormElement>("map-form").addEventListener("submit", (ev) => {
    ev.preventDefault();
    const n = Math.min(1000, Number(el<HTMLInputElement>("map-n").value) || 500);
    const k = Number(el<HTMLInputElement>("map-k").value) || 10;
    const out = el<HTMLElement>("map-status");
    out.textContent = "building map…";
    void gates["map"]!
      .run(() => client.map(n, k))
      .then((res) => {
        if (!res) return;
        screen = layout(res.points, canvas.width, canvas.height);
        hovered = null;
        draw(ctx, screen, hovered);
        out.textContent = `${res.points.length} points, KL ${res.kl.toFixed(3)}`;
      })
      .catch((err) => renderError(out, err));
  });

  canvas.addEventListener("mousemove", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const next = nearest(screen, ev.clientX - rect.left, ev.clientY - rect.top);
    if (next !== hovered) {
      hovered = next;
      draw(ctx, screen, hovered);
      canvas.style.cursor = hovered ? "pointer" : "default";
    }
  });

  canvas.addEventListener("click", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const hit = nearest(screen, ev.clientX - rect.left, ev.clientY - rect.top);
    if (hit) {
      el<HTMLInputElement>("nb-w").value = hit.word;
      showTab("neighbors");
      runNeighbors(hit.word);
    }
  });
}

export function boot(): void {
  for (const button of document.querySelectorAll<HTMLElement>(".tab")) {
    button.addEventListener("click", () => showTab(button.dataset.tab ?? ""));
  }
  setupForms();
  setupMap();
  showTab("similarity");
  void client
    .info()
    .then((info) => {
      el<HTMLElement>("info").textContent =
        `${info.vocab_size} words · ${info.dim}d · ${info.mode}`;
    })
    .catch(() => {
      el<HTMLElement>("info").textContent = "service unreachable";
    });
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
