// DOM wiring for the two screens. State handling lives in GameController and
// SpongeViewer; this file just renders and forwards events.

import { ApiClient, MoveJson } from "./api.js";
import { GameController, GameState } from "./game.js";
import { diagonalVector, maxMultiplier, unitVector } from "./rules.js";
import { MAX_LEVEL, SpongeViewer } from "./sponge.js";

const api = new ApiClient();
const controller = new GameController(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const playScreen = el<HTMLElement>("play-screen");
const spongeScreen = el<HTMLElement>("sponge-screen");
const tabPlay = el<HTMLButtonElement>("tab-play");
const tabSponge = el<HTMLButtonElement>("tab-sponge");

const startInput = el<HTMLInputElement>("start-input");
const humanFirst = el<HTMLInputElement>("human-first");
const newGameForm = el<HTMLFormElement>("new-game-form");
const banner = el<HTMLDivElement>("banner");
const errorBox = el<HTMLDivElement>("error");
const board = el<HTMLDivElement>("board");
const moveForm = el<HTMLFormElement>("move-form");
const moveTarget = el<HTMLSelectElement>("move-target");
const moveK = el<HTMLInputElement>("move-k");
const hintBtn = el<HTMLButtonElement>("hint-btn");
const hintsList = el<HTMLUListElement>("hints");
const historyList = el<HTMLOListElement>("history");

// --- play screen -------------------------------------------------------------

function vectorLabel(vector: number[]): string {
  if (vector.every((c) => c === 1)) return "diagonal";
  return `heap ${vector.indexOf(1) + 1}`;
}

function selectedVector(n: number): number[] {
  const value = moveTarget.value;
  if (value === "diagonal") return diagonalVector(n);
  return unitVector(n, parseInt(value, 10));
}

function rebuildTargets(n: number): void {
  moveTarget.innerHTML = "";
  for (let i = 0; i < n; i++) {
    const opt = document.createElement("option");
    opt.value = `${i}`;
    opt.textContent = `heap ${i + 1}`;
    moveTarget.appendChild(opt);
  }
  const diag = document.createElement("option");
  diag.value = "diagonal";
  diag.textContent = "all heaps (diagonal)";
  moveTarget.appendChild(diag);
}

function hintTargets(hints: MoveJson[]): Set<number> {
  const heaps = new Set<number>();
  for (const hint of hints) {
    hint.vector.forEach((c, i) => {
      if (c === 1) heaps.add(i);
    });
  }
  return heaps;
}

function renderBoard(state: GameState): void {
  board.innerHTML = "";
  const session = state.session;
  if (!session) return;
  const hinted = state.hints ? hintTargets(state.hints) : new Set<number>();
  session.position.forEach((count, i) => {
    const heap = document.createElement("div");
    heap.className = "heap";
    if (moveTarget.value === `${i}`) heap.classList.add("selected");
    if (hinted.has(i)) heap.classList.add("hinted");
    const shown = Math.min(count, 24);
    for (let t = 0; t < shown; t++) {
      const token = document.createElement("div");
      token.className = "token";
      heap.appendChild(token);
    }
    const label = document.createElement("div");
    label.className = "heap-label";
    label.textContent = `heap ${i + 1}: ${count}`;
    heap.appendChild(label);
    heap.addEventListener("click", () => {
      moveTarget.value = `${i}`;
      render(controller.getState());
    });
    board.appendChild(heap);
  });
}

function renderHistory(state: GameState): void {
  historyList.innerHTML = "";
  if (!state.session) return;
  for (const entry of state.session.history) {
    const item = document.createElement("li");
    item.className = entry.mover;
    const move = `${vectorLabel(entry.move.vector)} −${entry.move.k}`;
    item.textContent = `${entry.mover}: ${move} → ${entry.position.join(",")}`;
    historyList.appendChild(item);
  }
}

function renderHints(state: GameState): void {
  hintsList.innerHTML = "";
  if (!state.hints) {
    hintsList.classList.add("hidden");
    return;
  }
  hintsList.classList.remove("hidden");
  if (state.hints.length === 0) {
    const item = document.createElement("li");
    item.textContent = "no winning move from here";
    hintsList.appendChild(item);
    return;
  }
  for (const hint of state.hints) {
    const item = document.createElement("li");
    item.textContent = `${vectorLabel(hint.vector)} −${hint.k}`;
    item.addEventListener("click", () => {
      const diagonal = hint.vector.every((c) => c === 1);
      moveTarget.value = diagonal ? "diagonal" : `${hint.vector.indexOf(1)}`;
      moveK.value = `${hint.k}`;
      render(controller.getState());
    });
    hintsList.appendChild(item);
  }
}

function render(state: GameState): void {
  errorBox.classList.toggle("hidden", !state.error);
  errorBox.textContent = state.error ?? "";

  const session = state.session;
  moveForm.classList.toggle("hidden", !session || session.status !== "human-to-move");
  banner.classList.add("hidden");
  banner.classList.remove("win", "loss");
  if (session && session.status === "finished") {
    banner.classList.remove("hidden");
    if (session.winner === "human") {
      banner.classList.add("win");
      banner.textContent = "You win";
    } else {
      banner.classList.add("loss");
      banner.textContent = "Engine wins";
    }
  }

  if (session && session.status === "human-to-move") {
    const vector = selectedVector(session.n);
    const cap = maxMultiplier(vector, session.position);
    moveK.max = cap > 0 ? `${cap}` : "";
  }

  renderBoard(state);
  renderHistory(state);
  renderHints(state);
}

controller.subscribe(render);

newGameForm.addEventListener("submit", (e) => {
  e.preventDefault();
  const parts = startInput.value.split(",").map((s) => parseInt(s.trim(), 10));
  if (parts.some((x) => Number.isNaN(x))) {
    render({ ...controller.getState(), error: "heaps must be comma-separated integers" });
    return;
  }
  rebuildTargets(parts.length);
  void controller.newGame(parts.length, parts, humanFirst.checked);
});

moveForm.addEventListener("submit", (e) => {
  e.preventDefault();
  const session = controller.getState().session;
  if (!session) return;
  const k = parseInt(moveK.value, 10);
  void controller.submitMove(selectedVector(session.n), k);
});

moveTarget.addEventListener("change", () => render(controller.getState()));

hintBtn.addEventListener("click", () => {
  const state = controller.getState();
  if (state.hints) controller.clearHints();
  else void controller.requestHints();
});

// --- sponge screen -------------------------------------------------------------

const slider = el<HTMLInputElement>("level-slider");
const stats = el<HTMLSpanElement>("sponge-stats");
const retryBtn = el<HTMLButtonElement>("retry-btn");
const canvas = el<HTMLCanvasElement>("sponge-canvas");

slider.max = `${MAX_LEVEL}`;

const viewer = new SpongeViewer(canvas, api, (s) => {
  retryBtn.classList.toggle("hidden", !s.error);
  stats.textContent = s.error
    ? `failed to load level ${s.m}: ${s.error}`
    : `m=${s.m} · ${s.count} points · slope ${s.slope}`;
});

slider.addEventListener("input", () => void viewer.setLevel(parseInt(slider.value, 10)));
retryBtn.addEventListener("click", () => void viewer.retry());

let spongeStarted = false;

function showTab(which: "play" | "sponge"): void {
  playScreen.classList.toggle("hidden", which !== "play");
  spongeScreen.classList.toggle("hidden", which !== "sponge");
  tabPlay.classList.toggle("active", which === "play");
  tabSponge.classList.toggle("active", which === "sponge");
  if (which === "sponge" && !spongeStarted) {
    spongeStarted = true;
    void viewer.setLevel(parseInt(slider.value, 10));
  }
}

tabPlay.addEventListener("click", () => showTab("play"));
tabSponge.addEventListener("click", () => showTab("sponge"));
