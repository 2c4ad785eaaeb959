/** Word console: two words in the current quiver's generators, decided
 * by the service, with a client-side history of queries. */

import { ApiClient, QuiverJson } from "./api.js";

export class WordConsole {
  readonly root: HTMLElement;
  private readonly input1: HTMLInputElement;
  private readonly input2: HTMLInputElement;
  private readonly history: HTMLUListElement;
  private readonly verdict: HTMLElement;
  private quiver: QuiverJson | null = null;

  constructor(private readonly api: ApiClient, doc: Document = document) {
    this.root = doc.createElement("section");
    this.root.id = "word-console";
    const heading = doc.createElement("h3");
    heading.textContent = "Word console";
    this.input1 = doc.createElement("input");
    this.input1.id = "word-input-1";
    this.input1.placeholder = "s1 s2 s1";
    this.input2 = doc.createElement("input");
    this.input2.id = "word-input-2";
    this.input2.placeholder = "s2 s1 s2";
    const button = doc.createElement("button");
    button.id = "word-compare";
    button.textContent = "compare";
    button.addEventListener("click", () => {
      void this.compare();
    });
    this.verdict = doc.createElement("div");
    this.verdict.id = "word-verdict";
    this.history = doc.createElement("ul");
    this.history.id = "word-history";
    this.root.append(heading, this.input1, this.input2, button, this.verdict, this.history);
  }

  setQuiver(quiver: QuiverJson): void {
    this.quiver = quiver;
  }

  async compare(): Promise<void> {
    if (!this.quiver) return;
    const w1 = this.input1.value.trim();
    const w2 = this.input2.value.trim();
    if (!w1 || !w2) {
      this.verdict.textContent = "enter two words";
      return;
    }
    try {
      const result = await this.api.wordeq(this.quiver, w1, w2);
      const text = result.equal ? "equal" : "not equal";
      this.verdict.textContent = text;
      const doc = this.root.ownerDocument;
      const item = doc.createElement("li");
      item.textContent = `${w1}  vs  ${w2}  ->  ${text}`;
      this.history.prepend(item);
    } catch (error) {
      this.verdict.textContent = `error: ${(error as Error).message}`;
    }
  }
}
