/** JSON shapes of the embedding service API. */

export interface Info {
  vocab_size: number;
  dim: number;
  mode: string;
}

export interface Similarity {
  w1: string;
  w2: string;
  score: number;
}

export interface Scored {
  word: string;
  score: number;
}

export interface Neighbors {
  w: string;
  neighbors: Scored[];
}

export interface AnalogyResult {
  query: { a: string; b: string; c: string };
  results: Scored[];
}

export interface CompareResult {
  score: number;
}

export interface MapPoint {
  word: string;
  x: number;
  y: number;
  cluster: number;
}

export interface MapResult {
  points: MapPoint[];
  kl: number;
}

export interface ErrorBody {
  error: string;
  word?: string;
}
